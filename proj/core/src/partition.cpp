#include "ola/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ola {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw precondition_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw precondition_error("partition parts must weakly decrease");
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw parse_error("partition syntax is [a,b,...], got '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<long long> parts;
    if (!s.empty()) {
        std::istringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                parts.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw parse_error("bad partition part '" + item + "'");
            }
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

std::string to_string(const Partition& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out + "]";
}

Partition conjugate(const Partition& p) {
    std::vector<long long> out;
    if (p.empty()) return Partition{};
    out.resize(p.parts()[0], 0);
    for (long long part : p.parts())
        for (long long c = 0; c < part; ++c) ++out[c];
    return Partition(std::move(out));
}

bool is_even(const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(),
                       [](long long x) { return x % 2 == 0; });
}

// ---------------------------------------------------------------------------
// Kostka numbers

namespace {

using Key = std::pair<std::vector<long long>, std::vector<long long>>;

struct KostkaCache {
    std::mutex mu;
    std::map<Key, Int> table;
    std::size_t limit;

    KostkaCache() {
        limit = 1u << 20;
        if (const char* env = std::getenv("OLA_CACHE_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) limit = v;
        }
    }
};

KostkaCache& cache() {
    static KostkaCache c;
    return c;
}

// Peel the last content entry as a horizontal strip. Content arrives
// sorted descending with zeros stripped, so the peeled entry is minimal.
Int kostka_rec(const std::vector<long long>& shape,
               std::vector<long long>& content) {
    if (content.empty()) return shape.empty() ? 1 : 0;
    Key key{shape, content};
    {
        std::lock_guard lock(cache().mu);
        auto it = cache().table.find(key);
        if (it != cache().table.end()) return it->second;
    }
    long long strip = content.back();
    content.pop_back();
    Int total = 0;
    // Enumerate inner shapes nu with shape/nu a horizontal strip of the
    // required size: nu_i in [shape_{i+1}, shape_i], removing `strip` boxes.
    std::vector<long long> nu(shape.size());
    auto dfs = [&](auto&& self, size_t row, long long remaining) -> void {
        if (row == shape.size()) {
            if (remaining != 0) return;
            std::vector<long long> inner(nu);
            while (!inner.empty() && inner.back() == 0) inner.pop_back();
            total += kostka_rec(inner, content);
            return;
        }
        long long lo = row + 1 < shape.size() ? shape[row + 1] : 0;
        long long hi = shape[row];
        for (long long v = std::max(lo, hi - remaining); v <= hi; ++v) {
            nu[row] = v;
            self(self, row + 1, remaining - (hi - v));
        }
    };
    dfs(dfs, 0, strip);
    content.push_back(strip);
    {
        std::lock_guard lock(cache().mu);
        if (cache().table.size() >= cache().limit) cache().table.clear();
        cache().table.emplace(std::move(key), total);
    }
    return total;
}

}  // namespace

Int kostka(const Partition& mu, const CompositionVector& gamma) {
    long long total = 0;
    for (long long g : gamma) {
        if (g < 0) throw precondition_error("content entries must be >= 0");
        total += g;
    }
    if (total != mu.size()) return 0;
    std::vector<long long> content(gamma);
    std::sort(content.begin(), content.end(), std::greater<>());
    while (!content.empty() && content.back() == 0) content.pop_back();
    std::vector<long long> shape = mu.parts();
    return kostka_rec(shape, content);
}

void set_kostka_cache_limit(std::size_t entries) {
    std::lock_guard lock(cache().mu);
    cache().limit = entries ? entries : 1;
}

std::size_t kostka_cache_size() {
    std::lock_guard lock(cache().mu);
    return cache().table.size();
}

std::vector<Partition> partitions_of(long long n) {
    if (n < 0) throw precondition_error("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<long long> cur;
    auto dfs = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long long p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    dfs(dfs, n, n);
    return out;
}

// ---------------------------------------------------------------------------
// R(infinity,k) weight multiplicities

namespace {

// Entries of one chain as a content vector (negated for the <= 0 side),
// in index order with zeros stripped; nullopt-like failure via bool.
bool chain_content(const Weight& gamma, bool r_side, bool negate,
                   CompositionVector& out) {
    out.clear();
    for (const auto& [i, c] : gamma.entries()) {
        if (r_side != (i < 0)) continue;
        if (!is_integer(c)) return false;
        Rat v = negate ? -c : c;
        if (v < 0) return false;
        out.push_back(static_cast<long long>(numerator(v)));
    }
    return true;
}

long long content_sum(const CompositionVector& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

}  // namespace

Int c_coeff(LieFlavor flavor, long long k, const Weight& gamma) {
    if (k < 0) throw precondition_error("c_coeff: k must be >= 0");
    if (gamma.flavor() != flavor)
        throw precondition_error("c_coeff: flavor mismatch");
    if (!gamma.is_integral())
        throw precondition_error("c_coeff: gamma must be integral");
    if (flavor == LieFlavor::SL) {
        CompositionVector neg_l, pos_r;
        if (!chain_content(gamma, false, true, neg_l)) return 0;
        if (!chain_content(gamma, true, false, pos_r)) return 0;
        if (content_sum(neg_l) != k || content_sum(pos_r) != k) return 0;
        Int total = 0;
        for (const Partition& mu : partitions_of(k))
            total += kostka(mu, neg_l) * kostka(mu, pos_r);
        return total;
    }
    CompositionVector neg;
    if (!chain_content(gamma, false, true, neg)) return 0;
    if (content_sum(neg) != 2 * k) return 0;
    Int total = 0;
    for (const Partition& nu : partitions_of(k)) {
        std::vector<long long> doubled = nu.parts();
        for (long long& p : doubled) p *= 2;
        Partition mu(doubled);  // even partition 2*nu
        if (flavor == LieFlavor::SP) mu = conjugate(mu);
        total += kostka(mu, neg);
    }
    return total;
}

namespace {

// Nonnegative compositions of n into `slots` parts.
void compositions(long long n, int slots,
                  const std::function<void(const std::vector<long long>&)>& f) {
    std::vector<long long> cur(slots, 0);
    auto dfs = [&](auto&& self, int pos, long long remaining) -> void {
        if (pos == slots) {
            if (remaining == 0) f(cur);
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    dfs(dfs, 0, n);
}

}  // namespace

std::vector<Weight> enumerate_R_k_in_window(LieFlavor flavor, long long k,
                                            int window) {
    if (window < 1) throw precondition_error("window must be >= 1");
    if (k < 0) throw precondition_error("k must be >= 0");
    std::vector<Weight> out;
    if (flavor == LieFlavor::SL) {
        std::vector<std::vector<long long>> lefts, rights;
        compositions(k, window,
                     [&](const std::vector<long long>& c) { lefts.push_back(c); });
        rights = lefts;
        for (const auto& l : lefts)
            for (const auto& r : rights) {
                Weight g(flavor);
                for (int p = 0; p < window; ++p) {
                    g.set(p + 1, Rat(-l[p]));
                    g.set(-(p + 1), Rat(r[p]));
                }
                if (c_coeff(flavor, k, g) >= 1) out.push_back(std::move(g));
            }
    } else {
        compositions(2 * k, window, [&](const std::vector<long long>& c) {
            Weight g(flavor);
            for (int p = 0; p < window; ++p) g.set(p + 1, Rat(-c[p]));
            if (c_coeff(flavor, k, g) >= 1) out.push_back(std::move(g));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ola
