#pragma once

#include <map>
#include <vector>

#include "ola/coxeter.hpp"
#include "ola/weight.hpp"

namespace ola {

/// Windowed weight: integer entries per type-A factor (two factors for
/// SL windows, one for O/SP), read in chain order.
using FiniteWeight = std::vector<std::vector<long long>>;

/// Dot-action bookkeeping for one windowed weight: per factor the
/// antidominant arrangement of the rho-shifted entries (weakly
/// increasing), the multiplicities of repeated values (stabilizer block
/// structure), and the window permutation carrying the antidominant
/// arrangement to the given weight. For repeated values the permutation
/// is the longest coset representative.
struct OrbitDatum {
    std::vector<std::vector<long long>> antidominant;
    std::vector<std::vector<int>> stabilizer_blocks;
    std::vector<Permutation> perm;
};

OrbitDatum orbit_datum(const FiniteWeight& w);

/// Verma composition multiplicity [M(lam):L(mu)] in the finite type-A
/// product. Zero unless the dot-orbits (rho-shifted multisets) coincide
/// per factor; otherwise a product over factors of Kazhdan-Lusztig
/// polynomials evaluated at 1, with the antidominant base point and, on
/// singular orbits, longest coset representatives.
Int finite_verma_mult(const FiniteWeight& lam, const FiniteWeight& mu);

/// Stable multiplicity m(lam,mu): the eventual windowed Verma
/// multiplicity. Zero unless mu <=_fin lam; independent of the window
/// beyond the minimal one (pad lets tests confirm that).
Int stable_mult(const Weight& lam, const Weight& mu, int pad = 0);

/// Multiplicity table keyed by weight, with its base weight.
struct MultTable {
    Weight base;
    std::map<Weight, Int> entries;
    explicit MultTable(Weight b) : base(std::move(b)) {}
};

/// Standard-object multiplicity [W(lam):L(nu)]: with k the degree gap
/// degree(lam) - degree(nu), the sum of c_coeff(k, lam' - lam) *
/// stable_mult(lam', nu) over lam' in fin_up_set(nu). Zero when k is not
/// a nonnegative integer or the block labels differ.
Int standard_mult(const Weight& lam, const Weight& nu);

/// Standard-object content of the injective hull I(mu): the table
/// {lam -> m(lam,mu)} over fin_up_set(mu). Always finite; entry 1 at mu.
/// A table equal to {mu -> 1} certifies that W(mu) is injective.
MultTable injective_filtration(const Weight& mu);

/// Simple content of the k-th canonical-filtration layer of W(lam):
/// all nu with degree gap exactly k and standard_mult(lam,nu) > 0,
/// restricted to supports inside [1..window] per chain (the k=0 layer
/// has infinite support in full generality, so a window is mandatory;
/// window <= 0 selects the joint default, support bound + k).
MultTable layer_mults(const Weight& lam, long long k, int window = 0);

/// All nu <=_fin kappa with support inside [1..window] per chain.
std::vector<Weight> fin_down_set_in_window(const Weight& kappa, int window);

}  // namespace ola
