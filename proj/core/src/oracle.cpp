#include "ola/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ola {

// ---------------------------------------------------------------------------
// Kostka by raw tableau backtracking

namespace {

struct TableauState {
    std::vector<std::vector<int>> rows;
    std::vector<long long> remaining;
    Int count = 0;

    void fill(size_t r, size_t c, const std::vector<long long>& shape) {
        if (r == shape.size()) {
            ++count;
            return;
        }
        size_t nr = r, nc = c + 1;
        if (nc == static_cast<size_t>(shape[r])) {
            nr = r + 1;
            nc = 0;
        }
        int lo = c > 0 ? rows[r][c - 1] : 1;                       // weak rows
        int above = r > 0 ? rows[r - 1][c] + 1 : 1;                // strict cols
        lo = std::max(lo, above);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            rows[r][c] = v;
            fill(nr, nc, shape);
            ++remaining[v - 1];
        }
    }
};

}  // namespace

Int kostka_oracle(const Partition& mu, const CompositionVector& gamma) {
    long long total = std::accumulate(gamma.begin(), gamma.end(), 0LL);
    if (mu.size() > 12)
        throw resource_error("kostka_oracle: |mu| must be <= 12");
    for (long long g : gamma)
        if (g < 0) throw precondition_error("content entries must be >= 0");
    if (total != mu.size()) return 0;
    TableauState st;
    st.remaining = gamma;
    for (long long part : mu.parts())
        st.rows.emplace_back(part, 0);
    st.fill(0, 0, mu.parts());
    return st.count;
}

// ---------------------------------------------------------------------------
// Kazhdan-Lusztig polynomials through R-polynomials

namespace {

using Poly = std::vector<Int>;  // coeffs[i] on q^i

Poly padd(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

void ptrim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long long inv_count(const Permutation& w) {
    long long inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Permutation right_mult_s(const Permutation& w, int s) {
    Permutation out = w;
    std::swap(out[s - 1], out[s]);
    return out;
}

struct RSolver {
    std::map<std::pair<Permutation, Permutation>, Poly> rmemo;

    // R_{x,w} by the descent recursion on a right descent s of w.
    Poly r_poly(const Permutation& x, const Permutation& w) {
        if (x == w) return {Int(1)};
        long long lw = inv_count(w);
        if (lw == 0) return {};  // w = e, x != e
        auto key = std::make_pair(x, w);
        auto it = rmemo.find(key);
        if (it != rmemo.end()) return it->second;
        int s = 0;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                s = static_cast<int>(i + 1);
                break;
            }
        Permutation ws = right_mult_s(w, s);
        Permutation xs = right_mult_s(x, s);
        Poly res;
        if (inv_count(xs) < inv_count(x)) {
            res = r_poly(xs, ws);
        } else {
            // (q - 1) R_{x,ws} + q R_{xs,ws}
            Poly a = pmul({Int(-1), Int(1)}, r_poly(x, ws));
            Poly b = pmul({Int(0), Int(1)}, r_poly(xs, ws));
            res = padd(a, b);
        }
        ptrim(res);
        rmemo[key] = res;
        return res;
    }
};

}  // namespace

KLPolynomial kl_oracle(const Permutation& x, const Permutation& w) {
    if (x.size() != w.size())
        throw precondition_error("kl_oracle: size mismatch");
    if (w.size() > 5) throw resource_error("kl_oracle: window must be <= 5");
    int n = static_cast<int>(w.size());

    std::vector<Permutation> all;
    {
        Permutation p(n);
        std::iota(p.begin(), p.end(), 1);
        do {
            all.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    std::sort(all.begin(), all.end(),
              [](const Permutation& a, const Permutation& b) {
                  return inv_count(a) > inv_count(b);
              });

    RSolver rs;
    // Solve for P_{z,w} downward in length from w, using
    //   q^{len(w)-len(z)} P_{z,w}(1/q) - P_{z,w} = sum_{z<u<=w} R_{z,u} P_{u,w}.
    std::map<Permutation, Poly> p;
    long long lw = inv_count(w);
    for (const Permutation& z : all) {
        long long lz = inv_count(z);
        if (lz > lw) continue;
        if (z == w) {
            p[z] = {Int(1)};
            continue;
        }
        Poly rhs;
        for (const Permutation& u : all) {
            long long lu = inv_count(u);
            if (lu <= lz || lu > lw) continue;
            auto pu = p.find(u);
            if (pu == p.end() || pu->second.empty()) continue;
            Poly r = rs.r_poly(z, u);
            if (r.empty()) continue;
            rhs = padd(rhs, pmul(r, pu->second));
        }
        ptrim(rhs);
        long long gap = lw - lz;
        if (rhs.empty()) {
            // Then q^gap P(1/q) = P, forcing P = 0 for gap > 0.
            p[z] = {};
            continue;
        }
        Poly poly;
        for (long long j = 0; 2 * j < gap; ++j) {
            Int c = static_cast<size_t>(gap - j) < rhs.size()
                        ? rhs[static_cast<size_t>(gap - j)]
                        : Int(0);
            if (c != 0) {
                if (poly.size() <= static_cast<size_t>(j))
                    poly.resize(j + 1, Int(0));
                poly[j] = c;
            }
        }
        ptrim(poly);
        p[z] = poly;
    }

    KLPolynomial out;
    auto it = p.find(x);
    if (it != p.end()) out.coeffs = it->second;
    return out;
}

// ---------------------------------------------------------------------------
// Low-rank Verma multiplicities

namespace {

std::vector<long long> rho_shift(const std::vector<long long>& v) {
    std::vector<long long> t(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        t[i] = v[i] - static_cast<long long>(i + 1);
    return t;
}

}  // namespace

Int low_rank_verma_oracle(int rank, const std::vector<long long>& lam,
                          const std::vector<long long>& mu) {
    if (rank < 1 || rank > 2)
        throw resource_error("low_rank_verma_oracle: rank must be 1 or 2");
    size_t n = static_cast<size_t>(rank) + 1;
    if (lam.size() != n || mu.size() != n)
        throw precondition_error("low_rank_verma_oracle: window must be rank+1");
    if (lam == mu) return 1;
    std::vector<long long> tl = rho_shift(lam), tm = rho_shift(mu);
    {
        auto a = tl, b = tm;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return 0;
    }
    // mu lies below lam iff tm is reachable from tl by repeatedly
    // swapping an out-of-order pair (i < j with t_i > t_j). In ranks 1
    // and 2 every such composition factor occurs with multiplicity 1.
    std::set<std::vector<long long>> seen{tl};
    std::vector<std::vector<long long>> frontier{tl};
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& t : frontier) {
            if (t == tm) return 1;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    if (t[i] <= t[j]) continue;
                    auto u = t;
                    std::swap(u[i], u[j]);
                    if (seen.insert(u).second) next.push_back(u);
                }
        }
        frontier = std::move(next);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Layer-one tensor model for c-coefficients

Int c_coeff_oracle(LieFlavor flavor, long long k, const Weight& gamma,
                   int window) {
    if (k < 0 || window < 1)
        throw precondition_error("c_coeff_oracle: bad arguments");
    if (gamma.flavor() != flavor)
        throw precondition_error("c_coeff_oracle: flavor mismatch");

    // Basis monomials of the degree-one piece, as index pairs.
    std::vector<std::pair<int, int>> basis;
    if (flavor == LieFlavor::SL) {
        for (int i = 1; i <= window; ++i)
            for (int j = 1; j <= window; ++j) basis.emplace_back(i, j);
    } else if (flavor == LieFlavor::O) {
        for (int i = 1; i <= window; ++i)
            for (int j = i; j <= window; ++j) basis.emplace_back(i, j);
    } else {
        for (int i = 1; i <= window; ++i)
            for (int j = i + 1; j <= window; ++j) basis.emplace_back(i, j);
    }

    // Count multisets of k basis monomials whose weights sum to gamma.
    // SL monomial (i,j) has weight -eps_i + eps_{-j}; O/SP monomial
    // (i,j) has weight -eps_i - eps_j.
    std::map<int, long long> target;
    for (const auto& [idx, c] : gamma.entries()) {
        if (!is_integer(c)) return 0;
        target[idx] = static_cast<long long>(numerator(c));
    }
    Int count = 0;
    std::map<int, long long> acc;
    auto weight_of = [&](const std::pair<int, int>& m, int sign) {
        if (flavor == LieFlavor::SL) {
            acc[m.first] -= sign;
            acc[-m.second] += sign;
        } else {
            acc[m.first] -= sign;
            acc[m.second] -= sign;
        }
    };
    auto matches = [&]() {
        for (const auto& [i, v] : acc)
            if (v != (target.count(i) ? target.at(i) : 0)) return false;
        for (const auto& [i, v] : target)
            if (v != (acc.count(i) ? acc.at(i) : 0)) return false;
        return true;
    };
    auto dfs = [&](auto&& self, size_t from, long long left) -> void {
        if (left == 0) {
            if (matches()) ++count;
            return;
        }
        for (size_t b = from; b < basis.size(); ++b) {
            weight_of(basis[b], +1);
            self(self, b, left - 1);
            weight_of(basis[b], -1);
        }
    };
    dfs(dfs, 0, k);
    return count;
}

}  // namespace ola
