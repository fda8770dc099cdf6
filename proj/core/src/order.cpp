#include "ola/order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "chain_internal.hpp"
#include "ola/partition.hpp"

namespace ola {

using detail::chain_dense;
using detail::chain_sides;
using detail::chain_store;

namespace {

bool integral_difference(const Weight& a, const Weight& b) {
    return (a - b).is_integral();
}

// Tilde values (w + rho read in chain order) dense up to `window`.
std::vector<Rat> tilde(const std::vector<Rat>& chain, size_t window) {
    std::vector<Rat> t(window);
    for (size_t p = 0; p < window; ++p) {
        Rat c = p < chain.size() ? chain[p] : Rat(0);
        t[p] = c - Rat(static_cast<long long>(p + 1));
    }
    return t;
}

bool same_tilde_multiset(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    size_t window = std::max(a.size(), b.size());
    auto ta = tilde(a, window), tb = tilde(b, window);
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    return ta == tb;
}

// Support bound for the fin up-set of one chain: any lam >=_fin mu
// vanishes beyond B = max(W, max_{j<=W} (j - mu_j)). Proof sketch: a
// tilde value mu_j - j moved to position p gives lam_p = mu_j - j + p;
// positions past B can only receive their own rho value, since every
// displaced value would force a negative prefix sum of lam - mu.
size_t chain_bound(const std::vector<Rat>& mu_chain) {
    long long b = static_cast<long long>(mu_chain.size());
    for (size_t j = 0; j < mu_chain.size(); ++j) {
        Rat disp = Rat(static_cast<long long>(j + 1)) - mu_chain[j];
        Int f = floor_rat(disp);
        long long v = static_cast<long long>(f);
        if (Rat(f) < disp) ++v;  // ceiling
        b = std::max(b, v);
    }
    return static_cast<size_t>(std::max(b, 0LL));
}

// All per-chain rearrangements lam with mu <=_fin lam on this chain.
std::vector<std::vector<Rat>> chain_up_set(const std::vector<Rat>& mu_chain) {
    size_t B = chain_bound(mu_chain);
    std::vector<Rat> mu = mu_chain;
    mu.resize(B, Rat(0));
    // Multiset of tilde values available for placement.
    std::vector<Rat> values = tilde(mu, B);
    std::sort(values.begin(), values.end());
    std::vector<bool> used(B, false);
    std::vector<Rat> lam(B);
    std::vector<std::vector<Rat>> out;

    auto dfs = [&](auto&& self, size_t pos, Rat prefix) -> void {
        if (pos == B) {
            if (prefix == 0) {
                std::vector<Rat> trimmed = lam;
                while (!trimmed.empty() && trimmed.back() == 0)
                    trimmed.pop_back();
                out.push_back(std::move(trimmed));
            }
            return;
        }
        for (size_t v = 0; v < B; ++v) {
            if (used[v]) continue;
            if (v > 0 && values[v] == values[v - 1] && !used[v - 1]) continue;
            Rat entry = values[v] + Rat(static_cast<long long>(pos + 1));
            Rat next = prefix + entry - mu[pos];
            if (!is_integer(next) || next < 0) continue;
            used[v] = true;
            lam[pos] = entry;
            self(self, pos + 1, next);
            used[v] = false;
        }
    };
    dfs(dfs, 0, Rat(0));
    return out;
}

}  // namespace

bool leq_fin(const Weight& mu, const Weight& lam) {
    if (mu.flavor() != lam.flavor())
        throw precondition_error("leq_fin: flavor mismatch");
    if (mu == lam) return true;
    if (!integral_difference(lam, mu)) return false;
    if (!is_nonneg_simple_combination(lam - mu)) return false;
    for (bool side : chain_sides(mu.flavor()))
        if (!same_tilde_multiset(chain_dense(lam, side),
                                 chain_dense(mu, side)))
            return false;
    return true;
}

std::vector<Weight> fin_up_set(const Weight& mu) {
    std::vector<std::vector<std::vector<Rat>>> per_chain;
    for (bool side : chain_sides(mu.flavor()))
        per_chain.push_back(chain_up_set(chain_dense(mu, side)));

    std::vector<Weight> out;
    if (mu.flavor() == LieFlavor::SL) {
        for (const auto& l : per_chain[0])
            for (const auto& r : per_chain[1]) {
                Weight w(mu.flavor());
                chain_store(w, false, l);
                chain_store(w, true, r);
                out.push_back(std::move(w));
            }
    } else {
        for (const auto& l : per_chain[0]) {
            Weight w(mu.flavor());
            chain_store(w, false, l);
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// <=_inf

namespace {

// One shared envelope for gamma-step support: joint chain bounds of both
// endpoints plus the degree gap (a gamma-step of layer k can disturb at
// most k fresh positions) plus the caller's widening margin.
int inf_envelope(const Weight& mu, const Weight& lam, long long gap,
                 int widen) {
    size_t n = 1;
    for (const Weight* w : {&mu, &lam})
        for (bool side : chain_sides(mu.flavor()))
            n = std::max(n, chain_bound(chain_dense(*w, side)));
    return static_cast<int>(n) + static_cast<int>(gap) + widen;
}

struct StepTo {
    Weight from;
    OrderCertStep step;
};

void rebuild_cert(const Weight& mu, const Weight& last,
                  const std::map<Weight, StepTo>& parent, OrderCert* cert) {
    if (!cert) return;
    cert->start = mu;
    cert->steps.clear();
    std::vector<OrderCertStep> rev;
    Weight cur = last;
    while (!(cur == mu)) {
        auto it = parent.find(cur);
        rev.push_back(it->second.step);
        cur = it->second.from;
    }
    cert->steps.assign(rev.rbegin(), rev.rend());
}

}  // namespace

bool leq_inf(const Weight& mu, const Weight& lam, long long max_depth,
             OrderCert* cert, int widen) {
    if (mu.flavor() != lam.flavor())
        throw precondition_error("leq_inf: flavor mismatch");
    if (mu == lam) {
        if (cert) {
            cert->start = mu;
            cert->steps.clear();
        }
        return true;
    }
    if (!integral_difference(lam, mu)) return false;
    if (!same_block(mu, lam)) return false;
    Rat gap_r = degree(lam) - degree(mu);
    if (!is_integer(gap_r) || gap_r < 0) return false;
    long long gap = static_cast<long long>(numerator(gap_r));
    if (max_depth < 0) max_depth = gap;

    int env = inf_envelope(mu, lam, gap, widen);
    std::vector<std::vector<Weight>> gammas(gap + 1);
    for (long long k = 1; k <= gap; ++k)
        gammas[k] = enumerate_R_k_in_window(mu.flavor(), k, env);

    Rat d_lam = degree(lam);
    std::map<Weight, long long> best;  // min gamma-steps seen
    std::map<Weight, StepTo> parent;
    std::deque<std::pair<Weight, long long>> queue;
    best[mu] = 0;
    queue.emplace_back(mu, 0);

    auto offer = [&](const Weight& from, Weight to, bool gamma_step,
                     long long k, long long gcount) {
        auto it = best.find(to);
        if (it != best.end() && it->second <= gcount) return;
        best[to] = gcount;
        parent.insert_or_assign(to, StepTo{from, OrderCertStep{gamma_step, k, to}});
        queue.emplace_back(std::move(to), gcount);
    };

    while (!queue.empty()) {
        auto [nu, gcount] = queue.front();
        queue.pop_front();
        if (best[nu] < gcount) continue;
        if (leq_fin(nu, lam)) {
            if (cert) {
                if (!(nu == lam))
                    parent.insert_or_assign(
                        lam, StepTo{nu, OrderCertStep{false, 0, lam}});
                rebuild_cert(mu, lam, parent, cert);
            }
            return true;
        }
        for (Weight& up : fin_up_set(nu)) {
            if (up == nu) continue;
            offer(nu, std::move(up), false, 0, gcount);
        }
        if (gcount >= max_depth) continue;
        Rat room = d_lam - degree(nu);
        long long kmax = is_integer(room)
                             ? static_cast<long long>(numerator(room))
                             : 0;
        for (long long k = 1; k <= kmax; ++k)
            for (const Weight& g : gammas[k])
                offer(nu, nu - g, true, k, gcount + 1);
    }
    return false;
}

std::vector<Weight> inf_interval(const Weight& mu, const Weight& lam,
                                 int widen) {
    if (mu.flavor() != lam.flavor())
        throw precondition_error("inf_interval: flavor mismatch");
    if (mu == lam) return {mu};
    if (!integral_difference(lam, mu) || !same_block(mu, lam)) return {};
    Rat gap_r = degree(lam) - degree(mu);
    if (!is_integer(gap_r) || gap_r < 0) return {};
    long long gap = static_cast<long long>(numerator(gap_r));

    // Interval elements are confined to the window where the rho-shifted
    // entries of both endpoints stabilize, plus the degree gap (entries
    // outside it are pinned by the linkage multisets), and any node on a
    // step chain between mu and lam is itself an interval element. So
    // the search may drop candidates that leave the window, and
    // candidates with no degree room left that are not below lam in the
    // finite order (the latter is sound because <=_fin is transitive).
    int env = inf_envelope(mu, lam, gap, widen);
    auto confined = [&](const Weight& w) {
        for (const auto& [idx, c] : w.entries())
            if (std::abs(idx) > env) return false;
        return true;
    };
    // A layer-k root is a sum of k layer-1 roots, so single layer-1
    // steps generate the same reachability as steps of every layer.
    std::vector<Weight> gammas = enumerate_R_k_in_window(mu.flavor(), 1, env);

    // Everything reachable upward from mu under the degree ceiling,
    // recording the step graph so membership in the interval reduces to
    // reverse reachability from lam instead of one order query per node.
    Rat d_lam = degree(lam);
    std::map<Weight, std::vector<const Weight*>> preds;
    std::deque<const Weight*> queue;
    queue.push_back(&preds.emplace(mu, std::vector<const Weight*>{})
                         .first->first);
    while (!queue.empty()) {
        const Weight* nu = queue.front();
        queue.pop_front();
        auto offer_edge = [&](Weight&& up) {
            if (!confined(up)) return;
            if (degree(up) == d_lam && !leq_fin(up, lam)) return;
            auto [it, fresh] = preds.try_emplace(std::move(up));
            it->second.push_back(nu);
            if (fresh) queue.push_back(&it->first);
        };
        for (Weight& up : fin_up_set(*nu)) {
            if (up == *nu) continue;
            offer_edge(std::move(up));
        }
        if (degree(*nu) < d_lam)
            for (const Weight& g : gammas) offer_edge(*nu - g);
    }

    auto lam_it = preds.find(lam);
    if (lam_it == preds.end()) return {};
    std::set<const Weight*> reaches_lam{&lam_it->first};
    std::deque<const Weight*> back{&lam_it->first};
    while (!back.empty()) {
        const Weight* nu = back.front();
        back.pop_front();
        for (const Weight* p : preds.at(*nu))
            if (reaches_lam.insert(p).second) back.push_back(p);
    }
    std::vector<Weight> out;
    for (const auto& [kappa, _] : preds)
        if (reaches_lam.contains(&kappa)) out.push_back(kappa);
    if (!std::binary_search(out.begin(), out.end(), mu)) return {};
    return out;
}

}  // namespace ola
