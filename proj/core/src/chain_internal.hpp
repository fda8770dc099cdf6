#pragma once

#include <vector>

#include "ola/weight.hpp"

namespace ola::detail {

/// Coefficients of one chain read in chain order, dense up to max support.
/// The SL R side is normalized to look like an L chain: index -i maps to
/// position i with negated coefficient, so rho is -p at position p on every
/// chain and the simple roots are eps_p - eps_{p+1}.
std::vector<Rat> chain_dense(const Weight& w, bool r_side);

/// Write a normalized chain back into a weight (inverting the R-side
/// negation). Zero entries are dropped by Weight::set.
void chain_store(Weight& w, bool r_side, const std::vector<Rat>& v);

bool chain_is_partition(const std::vector<Rat>& v);
bool chain_nonneg_prefixes(const std::vector<Rat>& v);

/// Chains present for a flavor: {false} for O/SP, {false,true} for SL.
inline std::vector<bool> chain_sides(LieFlavor f) {
    return f == LieFlavor::SL ? std::vector<bool>{false, true}
                              : std::vector<bool>{false};
}

}  // namespace ola::detail
