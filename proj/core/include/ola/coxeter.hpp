#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ola/types.hpp"

namespace ola {

/// A permutation of {1..n} in one-line notation (1-based values).
using Permutation = std::vector<int>;

/// Text syntax: `[2,1,3]`.
Permutation parse_permutation(const std::string& text);
std::string to_string(const Permutation& w);
bool is_permutation(const Permutation& w);

/// Coxeter length = inversion count.
long long coxeter_length(const Permutation& w);

Permutation inverse(const Permutation& w);
/// (a*b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation identity_perm(int n);
Permutation longest_element(int n);

/// Bruhat order via the rank-matrix (dot) criterion: x <= w iff for all
/// (i,j), #{k <= i : x(k) >= j} <= #{k <= i : w(k) >= j}.
bool bruhat_leq(const Permutation& x, const Permutation& w);

/// Polynomial in q with exact integer coefficients, coeffs[i] on q^i.
struct KLPolynomial {
    std::vector<Int> coeffs;

    Int coeff(std::size_t i) const {
        return i < coeffs.size() ? coeffs[i] : Int(0);
    }
    long long degree() const {
        return static_cast<long long>(coeffs.size()) - 1;
    }
    Int eval_one() const;
    void trim();

    bool operator==(const KLPolynomial&) const = default;
};

std::string to_string(const KLPolynomial& p);

/// Which left descent the KL recursion branches on. The computed
/// polynomials are independent of the choice; tests exercise both.
enum class DescentPolicy { SmallestIndex, LargestIndex };

/// Memoized Kazhdan-Lusztig polynomials for one symmetric group S_n.
/// The context is internally synchronized; n is capped by OLA_MAX_WINDOW
/// (default 8) to keep the group enumeration tractable.
class KLContext {
public:
    explicit KLContext(int n,
                       DescentPolicy policy = DescentPolicy::SmallestIndex);

    int n() const { return n_; }

    /// P_{x,w}; zero polynomial when x is not below w in Bruhat order.
    const KLPolynomial& kl_poly(const Permutation& x, const Permutation& w);

    /// mu(x,w): coefficient of q^{(len(w)-len(x)-1)/2} in P_{x,w}, zero
    /// when len(w)-len(x) is even.
    Int mu(const Permutation& x, const Permutation& w);

    /// All elements of S_n, precomputed.
    const std::vector<Permutation>& elements() const { return elements_; }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    int n_;
    std::vector<Permutation> elements_;
};

/// Configured window cap (OLA_MAX_WINDOW, default 8).
int max_kl_window();

}  // namespace ola
