#include "ola/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ola/mult.hpp"
#include "ola/oracle.hpp"

namespace ola {

namespace {

void note_failure(SelfTestResult& r, const std::string& what) {
    ++r.failed;
    if (r.first_failure.empty()) r.first_failure = what;
}

// Nonnegative compositions of n with at most 4 slots.
std::vector<CompositionVector> small_contents(long long n) {
    std::vector<CompositionVector> out;
    CompositionVector cur(4, 0);
    auto dfs = [&](auto&& self, int pos, long long left) -> void {
        if (pos == 4) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    dfs(dfs, 0, n);
    return out;
}

SelfTestResult kostka_suite() {
    SelfTestResult r{"kostka-vs-tableaux"};
    for (long long n = 0; n <= 5; ++n)
        for (const Partition& mu : partitions_of(n))
            for (const CompositionVector& c : small_contents(n)) {
                ++r.checked;
                if (kostka(mu, c) != kostka_oracle(mu, c)) {
                    std::ostringstream os;
                    os << "K(" << to_string(mu) << ", content of " << n << ")";
                    note_failure(r, os.str());
                }
            }
    return r;
}

SelfTestResult kl_suite() {
    SelfTestResult r{"kl-vs-rpolynomials"};
    KLContext ctx(4);
    for (const Permutation& x : ctx.elements())
        for (const Permutation& w : ctx.elements()) {
            if (!bruhat_leq(x, w)) continue;
            ++r.checked;
            if (ctx.kl_poly(x, w).coeffs != kl_oracle(x, w).coeffs)
                note_failure(r, "P_{" + to_string(x) + "," + to_string(w) + "}");
        }
    return r;
}

SelfTestResult verma_suite() {
    SelfTestResult r{"verma-vs-lowrank"};
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int rank = 1; rank <= 2; ++rank) {
        size_t n = static_cast<size_t>(rank) + 1;
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<long long> lam(n), mu(n);
            for (auto& v : lam) v = entry(rng);
            // Draw mu from the rho-shifted multiset of lam so orbits match.
            std::vector<long long> t(n);
            for (size_t i = 0; i < n; ++i)
                t[i] = lam[i] - static_cast<long long>(i + 1);
            std::shuffle(t.begin(), t.end(), rng);
            for (size_t i = 0; i < n; ++i)
                mu[i] = t[i] + static_cast<long long>(i + 1);
            ++r.checked;
            Int fast = finite_verma_mult({lam}, {mu});
            Int slow = low_rank_verma_oracle(rank, lam, mu);
            if (fast != slow)
                note_failure(r, "rank " + std::to_string(rank) + " trial " +
                                    std::to_string(trial));
        }
    }
    return r;
}

SelfTestResult c_coeff_suite() {
    SelfTestResult r{"ccoeff-vs-tensor-model"};
    const int window = 3;
    for (LieFlavor f : {LieFlavor::SL, LieFlavor::O, LieFlavor::SP})
        for (long long k = 0; k <= 3; ++k)
            for (const Weight& g : enumerate_R_k_in_window(f, k, window)) {
                ++r.checked;
                if (c_coeff(f, k, g) != c_coeff_oracle(f, k, g, window))
                    note_failure(r, to_string(f) + " k=" + std::to_string(k) +
                                        " gamma=" + to_string(g));
            }
    return r;
}

}  // namespace

std::vector<SelfTestResult> run_selftests() {
    return {kostka_suite(), kl_suite(), verma_suite(), c_coeff_suite()};
}

}  // namespace ola
