#pragma once

#include "ola/coxeter.hpp"
#include "ola/mult.hpp"
#include "ola/partition.hpp"

namespace ola {

/// Slow-path reference implementations used only to validate the fast
/// paths. They deliberately share no helpers or caches with the rest of
/// the library, so agreement is evidence rather than tautology.

/// Count of semistandard Young tableaux of shape mu, content gamma, by
/// raw backtracking over fillings. |mu| <= 12.
Int kostka_oracle(const Partition& mu, const CompositionVector& gamma);

/// P_{x,w} computed through R-polynomials and the triangular system of
/// the defining degree/inversion identity. Window <= 5.
KLPolynomial kl_oracle(const Permutation& x, const Permutation& w);

/// [M(lam):L(mu)] for sl(2) (rank 1) or sl(3) (rank 2) by closed forms
/// and explicit dot-orbit listing, one type-A factor of size rank+1.
Int low_rank_verma_oracle(int rank, const std::vector<long long>& lam,
                          const std::vector<long long>& mu);

/// Multiplicity of gamma in the degree-k piece of the defining tensor
/// model: S^k(A (x) B) for SL (A = L chain, B = R chain), S^k(S^2 V) for
/// O, S^k(Lambda^2 V) for SP, by direct monomial enumeration inside the
/// window [1..window].
Int c_coeff_oracle(LieFlavor flavor, long long k, const Weight& gamma,
                   int window);

}  // namespace ola
