#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ola/types.hpp"

namespace ola {

/// The three finitary flavors. O always uses the D-infinity convention;
/// the B-infinity root system reduces to it and is not modelled.
enum class LieFlavor { SL, O, SP };

std::string to_string(LieFlavor f);
LieFlavor flavor_from_string(const std::string& s);

/// A finitely supported rational weight on the index chain.
///
/// For SL the chain is two-sided: positive indices form the L side,
/// negative indices the R side (chain order ... < -2 < -1). For O/SP there
/// is a single chain on positive indices. Zero coefficients are dropped,
/// so equality of weights is structural equality.
class Weight {
public:
    explicit Weight(LieFlavor flavor) : flavor_(flavor) {}
    Weight(LieFlavor flavor, std::map<int, Rat> entries);

    LieFlavor flavor() const { return flavor_; }
    const std::map<int, Rat>& entries() const { return entries_; }

    Rat at(int index) const;
    void set(int index, Rat value);

    bool is_zero() const { return entries_.empty(); }
    bool is_integral() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;

    bool operator==(const Weight& o) const = default;
    auto operator<=>(const Weight& o) const = default;

private:
    LieFlavor flavor_;
    std::map<int, Rat> entries_;
};

/// rho normalization of Lemma "interval-finite" (rho = sum of -i * eps_i
/// along each chain in chain order); pairs to 1 with every simple coroot.
Rat rho(LieFlavor flavor, int index);

/// Half the signed coefficient sum; grades the canonical filtration.
Rat degree(const Weight& w);

/// Weak-decrease/nonnegative-integer dominance test per chain.
bool is_b_dominant(const Weight& w);

/// True iff diff is a nonnegative integer combination of the simple finite
/// roots (consecutive chain differences). Equivalently: per chain, running
/// prefix sums in chain order are nonnegative integers and the total is 0.
bool is_nonneg_simple_combination(const Weight& diff);

/// Canonical name of the block (coset of the weight modulo the root
/// lattice Q). Two weights get equal labels iff their difference lies in Q.
///
/// Stored form: the pointwise map of nonzero fractional parts, plus a
/// residue datum: for SL the exact coefficient sum (roots sum to 0), for
/// O/SP the parity of the summed integer parts (roots have even sum).
struct BlockLabel {
    LieFlavor flavor;
    std::map<int, Rat> fractional;  // index -> fractional part, nonzero only
    Rat sl_sum;                     // SL only, else 0
    int parity = 0;                 // O/SP only: 0 or 1

    bool operator==(const BlockLabel&) const = default;
    auto operator<=>(const BlockLabel&) const = default;
};

BlockLabel block_label(const Weight& w);
bool same_block(const Weight& a, const Weight& b);

/// Text syntax: comma separated `index:coefficient` pairs, e.g.
/// `1:3,2:1,-1:-2`; coefficients are integers or `p/q`. Empty string is
/// the zero weight.
Weight parse_weight(LieFlavor flavor, const std::string& text);
std::string to_string(const Weight& w);

std::string to_string(const Rat& r);
Rat parse_rational(const std::string& text);

}  // namespace ola
