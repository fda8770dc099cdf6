#pragma once

#include <string>
#include <vector>

#include "ola/partition.hpp"
#include "ola/weight.hpp"

namespace ola {

/// Label (x, y, Y_l, Y_r) of a primitive ideal of the enveloping algebra
/// in the SL flavor. Everything produced here has Grassmann number y = 0.
struct PrimitiveIdealLabel {
    long long x = 0;
    long long y = 0;
    Partition yl;
    Partition yr;

    bool operator==(const PrimitiveIdealLabel&) const = default;
};

/// Text form: `I(x=1, y=0, Yl=[1], Yr=[])`.
std::string to_string(const PrimitiveIdealLabel& l);
PrimitiveIdealLabel parse_label(const std::string& text);

/// Annihilator label of the integrable simple with b-dominant highest
/// weight lam (SL flavor): (0, 0, lam^1, lam^2) where lam^1 is the L-chain
/// partition and lam^2 the negated R-chain partition.
PrimitiveIdealLabel annihilator_of_integrable(const Weight& lam);

/// The explicit weight whose simple module has annihilator
/// I(x, 0, Y_l, Y_r): lam^L = sum a_i eps_i + sum Y_l[i] eps_{x+i},
/// lam^R = -sum Y_r[s+1-i] eps_{-i}. Requires each a_i and each pairwise
/// difference a_i - a_j to be non-integral.
Weight weight_from_label(long long x, const Partition& yl, const Partition& yr,
                         const std::vector<Rat>& a);

/// Every finite-length object in the category has nonzero annihilator;
/// recorded as a predicate for downstream consumers.
bool is_nonzero_annihilator_guaranteed(long long module_length);

}  // namespace ola
