#include "ola/mult.hpp"

#include <algorithm>
#include <map>

#include "chain_internal.hpp"
#include "ola/order.hpp"
#include "ola/partition.hpp"

namespace ola {

using detail::chain_dense;
using detail::chain_sides;
using detail::chain_store;

namespace {

// rho-shifted entries of one factor: entry p (0-based) minus (p+1).
std::vector<long long> shifted(const std::vector<long long>& f) {
    std::vector<long long> t(f.size());
    for (size_t p = 0; p < f.size(); ++p)
        t[p] = f[p] - static_cast<long long>(p + 1);
    return t;
}

// The window permutation carrying the sorted (weakly increasing)
// arrangement `base` to `target`, choosing the longest coset
// representative on ties: the i-th base slot of a repeated value goes to
// the (m+1-i)-th target position of that value.
Permutation coset_max_perm(const std::vector<long long>& base,
                           const std::vector<long long>& target) {
    size_t n = base.size();
    std::map<long long, std::vector<int>> slots, positions;
    for (size_t p = 0; p < n; ++p) {
        slots[base[p]].push_back(static_cast<int>(p + 1));
        positions[target[p]].push_back(static_cast<int>(p + 1));
    }
    Permutation sigma(n);
    for (const auto& [v, s] : slots) {
        const auto& q = positions.at(v);
        for (size_t i = 0; i < s.size(); ++i)
            sigma[q[i] - 1] = s[s.size() - 1 - i];
    }
    return sigma;
}

}  // namespace

OrbitDatum orbit_datum(const FiniteWeight& w) {
    OrbitDatum d;
    for (const auto& factor : w) {
        std::vector<long long> t = shifted(factor);
        std::vector<long long> base = t;
        std::sort(base.begin(), base.end());
        std::vector<int> blocks;
        for (size_t p = 0; p < base.size(); ++p) {
            if (p == 0 || base[p] != base[p - 1])
                blocks.push_back(1);
            else
                ++blocks.back();
        }
        d.perm.push_back(coset_max_perm(base, t));
        d.antidominant.push_back(std::move(base));
        d.stabilizer_blocks.push_back(std::move(blocks));
    }
    return d;
}

Int finite_verma_mult(const FiniteWeight& lam, const FiniteWeight& mu) {
    if (lam.size() != mu.size())
        throw precondition_error("finite_verma_mult: factor count mismatch");
    for (size_t f = 0; f < lam.size(); ++f)
        if (lam[f].size() != mu[f].size())
            throw precondition_error("finite_verma_mult: window mismatch");

    OrbitDatum dl = orbit_datum(lam), dm = orbit_datum(mu);
    Int result = 1;
    for (size_t f = 0; f < lam.size(); ++f) {
        if (dl.antidominant[f] != dm.antidominant[f]) return 0;
        if (lam[f].empty()) continue;
        const Permutation& w = dl.perm[f];
        const Permutation& x = dm.perm[f];
        if (!bruhat_leq(x, w)) return 0;
        KLContext ctx(static_cast<int>(lam[f].size()));
        result *= ctx.kl_poly(x, w).eval_one();
    }
    return result;
}

namespace {

// Window the chains of both weights to a common size per factor.
FiniteWeight restrict_to_window(const Weight& w,
                                const std::vector<size_t>& windows) {
    FiniteWeight out;
    auto sides = chain_sides(w.flavor());
    for (size_t f = 0; f < sides.size(); ++f) {
        std::vector<Rat> chain = chain_dense(w, sides[f]);
        chain.resize(windows[f], Rat(0));
        std::vector<long long> fin(windows[f]);
        for (size_t p = 0; p < windows[f]; ++p) {
            if (!is_integer(chain[p]))
                throw precondition_error("windowed reduction needs integral entries");
            fin[p] = static_cast<long long>(numerator(chain[p]));
        }
        out.push_back(std::move(fin));
    }
    return out;
}

std::vector<size_t> joint_windows(const Weight& a, const Weight& b, int pad) {
    std::vector<size_t> out;
    for (bool side : chain_sides(a.flavor())) {
        size_t n = std::max(chain_dense(a, side).size(),
                            chain_dense(b, side).size());
        out.push_back(std::max<size_t>(n, 1) + static_cast<size_t>(pad));
    }
    return out;
}

}  // namespace

Int stable_mult(const Weight& lam, const Weight& mu, int pad) {
    if (lam.flavor() != mu.flavor())
        throw precondition_error("stable_mult: flavor mismatch");
    if (!lam.is_integral() || !mu.is_integral())
        throw precondition_error("stable_mult: weights must be integral");
    if (!leq_fin(mu, lam)) return 0;
    auto windows = joint_windows(lam, mu, pad);
    return finite_verma_mult(restrict_to_window(lam, windows),
                             restrict_to_window(mu, windows));
}

Int standard_mult(const Weight& lam, const Weight& nu) {
    if (lam.flavor() != nu.flavor())
        throw precondition_error("standard_mult: flavor mismatch");
    if (!lam.is_integral() || !nu.is_integral())
        throw precondition_error("standard_mult: weights must be integral");
    Rat gap = degree(lam) - degree(nu);
    if (!is_integer(gap) || gap < 0) return 0;
    if (!same_block(lam, nu)) return 0;
    long long k = static_cast<long long>(numerator(gap));
    if (k == 0) return stable_mult(lam, nu);
    // Any nonzero term has m(lam+gamma, nu) > 0, hence nu <=_fin
    // lam+gamma, so fin_up_set(nu) exhausts the candidates.
    Int total = 0;
    for (const Weight& lamp : fin_up_set(nu)) {
        Int c = c_coeff(lam.flavor(), k, lamp - lam);
        if (c == 0) continue;
        total += c * stable_mult(lamp, nu);
    }
    return total;
}

MultTable injective_filtration(const Weight& mu) {
    if (!mu.is_integral())
        throw precondition_error("injective_filtration: integral weight required");
    MultTable table(mu);
    for (const Weight& lam : fin_up_set(mu)) {
        Int m = stable_mult(lam, mu);
        if (m != 0) table.entries.emplace(lam, std::move(m));
    }
    return table;
}

std::vector<Weight> fin_down_set_in_window(const Weight& kappa, int window) {
    if (window < 1)
        throw precondition_error("fin_down_set_in_window: window must be >= 1");
    std::vector<std::vector<std::vector<Rat>>> per_chain;
    for (bool side : chain_sides(kappa.flavor())) {
        std::vector<Rat> k = chain_dense(kappa, side);
        if (k.size() > static_cast<size_t>(window))
            throw precondition_error(
                "fin_down_set_in_window: kappa exceeds the window");
        k.resize(window, Rat(0));
        std::vector<Rat> values(window);
        for (int p = 0; p < window; ++p) values[p] = k[p] - Rat(p + 1);
        std::sort(values.begin(), values.end());

        // Permutations nu of the shifted values with kappa - nu keeping
        // nonnegative integer prefix sums.
        std::vector<bool> used(window, false);
        std::vector<Rat> nu(window);
        std::vector<std::vector<Rat>> chain_out;
        auto dfs = [&](auto&& self, int pos, Rat prefix) -> void {
            if (pos == window) {
                if (prefix == 0) {
                    std::vector<Rat> trimmed = nu;
                    while (!trimmed.empty() && trimmed.back() == 0)
                        trimmed.pop_back();
                    chain_out.push_back(std::move(trimmed));
                }
                return;
            }
            for (int v = 0; v < window; ++v) {
                if (used[v]) continue;
                if (v > 0 && values[v] == values[v - 1] && !used[v - 1])
                    continue;
                Rat entry = values[v] + Rat(pos + 1);
                Rat next = prefix + k[pos] - entry;
                if (!is_integer(next) || next < 0) continue;
                used[v] = true;
                nu[pos] = entry;
                self(self, pos + 1, next);
                used[v] = false;
            }
        };
        dfs(dfs, 0, Rat(0));
        per_chain.push_back(std::move(chain_out));
    }

    std::vector<Weight> out;
    if (kappa.flavor() == LieFlavor::SL) {
        for (const auto& l : per_chain[0])
            for (const auto& r : per_chain[1]) {
                Weight w(kappa.flavor());
                chain_store(w, false, l);
                chain_store(w, true, r);
                out.push_back(std::move(w));
            }
    } else {
        for (const auto& l : per_chain[0]) {
            Weight w(kappa.flavor());
            chain_store(w, false, l);
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MultTable layer_mults(const Weight& lam, long long k, int window) {
    if (!lam.is_integral())
        throw precondition_error("layer_mults: integral weight required");
    if (k < 0) throw precondition_error("layer_mults: k must be >= 0");
    if (window <= 0) {
        size_t n = 1;
        for (bool side : chain_sides(lam.flavor()))
            n = std::max(n, chain_dense(lam, side).size());
        window = static_cast<int>(n + static_cast<size_t>(k));
    }
    MultTable table(lam);
    std::map<Weight, bool> considered;
    for (const Weight& g : enumerate_R_k_in_window(lam.flavor(), k, window)) {
        Weight kappa = lam + g;
        for (const Weight& nu : fin_down_set_in_window(kappa, window)) {
            if (considered.contains(nu)) continue;
            considered[nu] = true;
            Int m = standard_mult(lam, nu);
            if (m != 0) table.entries.emplace(nu, std::move(m));
        }
    }
    return table;
}

}  // namespace ola
