#pragma once

#include <vector>

#include "ola/types.hpp"
#include "ola/weight.hpp"

namespace ola {

/// Weakly decreasing positive integers; the empty list is the zero
/// partition. Construction normalizes away zero parts and validates.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    long long size() const;  // |mu|, number of boxes
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<long long> parts_;
};

/// Text syntax: `[3,1,1]`; `[]` is the zero partition.
Partition parse_partition(const std::string& text);
std::string to_string(const Partition& p);

/// Transpose of the Young diagram; involutive.
Partition conjugate(const Partition& p);

/// True iff every part is even.
bool is_even(const Partition& p);

/// A content vector for tableau counting: nonnegative integers.
using CompositionVector = std::vector<long long>;

/// Number of semistandard Young tableaux of shape mu and content gamma.
/// Zero when |mu| != sum(gamma); invariant under permutations of gamma.
/// Memoized horizontal-strip recursion; the cache is internally
/// synchronized and bounded by kostka_cache_limit.
Int kostka(const Partition& mu, const CompositionVector& gamma);

/// All partitions of n (n >= 0).
std::vector<Partition> partitions_of(long long n);

/// Cache bound knob (entries). Reads OLA_CACHE_LIMIT on first use.
void set_kostka_cache_limit(std::size_t entries);
std::size_t kostka_cache_size();

/// Multiplicity of the integer weight gamma in R(infinity,k):
///   SL: sum over mu |- k of K(mu,-gamma^L) K(mu,gamma^R),
///        gamma^L <= 0 with sum -k, gamma^R >= 0 with sum k;
///   O : sum over even mu, |mu| = 2k, of K(mu,-gamma), gamma <= 0, sum -2k;
///   SP: same with conjugate-even mu.
/// Returns 0 whenever gamma fails the support-shape conditions.
Int c_coeff(LieFlavor flavor, long long k, const Weight& gamma);

/// All gamma in R_k supported inside [1..window] per chain (both chains
/// for SL), i.e. those with c_coeff >= 1.
std::vector<Weight> enumerate_R_k_in_window(LieFlavor flavor, long long k,
                                            int window);

}  // namespace ola
