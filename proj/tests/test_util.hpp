#pragma once

#include <random>

#include "ola/weight.hpp"

namespace ola_tests {

/// Random integral weight with per-chain support inside [1..max_support]
/// and entries in [-3,3]. Deterministic given the caller's engine.
inline ola::Weight random_integral_weight(ola::LieFlavor f, std::mt19937& rng,
                                          int max_support = 4) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> support(0, max_support);
    ola::Weight w(f);
    int nl = support(rng);
    for (int i = 1; i <= nl; ++i) w.set(i, ola::Rat(entry(rng)));
    if (f == ola::LieFlavor::SL) {
        int nr = support(rng);
        for (int i = 1; i <= nr; ++i) w.set(-i, ola::Rat(entry(rng)));
    }
    return w;
}

/// Random b-dominant weight: weakly decreasing nonnegative entries.
inline ola::Weight random_dominant_weight(ola::LieFlavor f, std::mt19937& rng,
                                          int max_support = 3) {
    std::uniform_int_distribution<int> support(0, max_support);
    ola::Weight w(f);
    // On the SL R side dominance means entries at -1, -2, ... are
    // nonpositive with weakly decreasing absolute value.
    auto fill = [&](int sign) {
        int n = support(rng);
        int prev = 3;
        for (int i = 1; i <= n; ++i) {
            std::uniform_int_distribution<int> step(0, prev);
            prev = step(rng);
            if (prev == 0) break;
            w.set(sign * i, ola::Rat(sign * prev));
        }
    };
    fill(1);
    if (f == ola::LieFlavor::SL) fill(-1);
    return w;
}

}  // namespace ola_tests
