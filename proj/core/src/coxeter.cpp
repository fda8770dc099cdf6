#include "ola/coxeter.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ola {

Permutation parse_permutation(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw parse_error("permutation syntax is [2,1,3], got '" + text + "'");
    s = s.substr(1, s.size() - 2);
    Permutation w;
    if (!s.empty()) {
        std::istringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                w.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw parse_error("bad permutation entry '" + item + "'");
            }
        }
    }
    if (!is_permutation(w))
        throw parse_error("not a permutation of 1..n: '" + text + "'");
    return w;
}

std::string to_string(const Permutation& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out + "]";
}

bool is_permutation(const Permutation& w) {
    std::vector<bool> seen(w.size(), false);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

long long coxeter_length(const Permutation& w) {
    long long inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Permutation inverse(const Permutation& w) {
    Permutation out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[w[i] - 1] = static_cast<int>(i + 1);
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw precondition_error("compose: size mismatch");
    Permutation out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i] - 1];
    return out;
}

Permutation identity_perm(int n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

Permutation longest_element(int n) {
    Permutation w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return w;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
    if (x.size() != w.size())
        throw precondition_error("bruhat_leq: size mismatch");
    int n = static_cast<int>(x.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int cx = 0, cw = 0;
            for (int k = 0; k < i; ++k) {
                if (x[k] >= j) ++cx;
                if (w[k] >= j) ++cw;
            }
            if (cx > cw) return false;
        }
    }
    return true;
}

Int KLPolynomial::eval_one() const {
    Int s = 0;
    for (const Int& c : coeffs) s += c;
    return s;
}

void KLPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string to_string(const KLPolynomial& p) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::ostringstream c;
        c << p.coeffs[i];
        if (i == 0) {
            out += c.str();
        } else {
            if (p.coeffs[i] != 1) out += c.str() + "*";
            out += "q";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

int max_kl_window() {
    int cap = 8;
    if (const char* env = std::getenv("OLA_MAX_WINDOW")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 12) cap = static_cast<int>(v);
    }
    return cap;
}

// ---------------------------------------------------------------------------

namespace {

// Pack a permutation of 1..n (n <= 12) into 4 bits per slot.
std::uint64_t pack(const Permutation& w) {
    std::uint64_t k = 0;
    for (int v : w) k = (k << 4) | static_cast<std::uint64_t>(v - 1);
    return k;
}

KLPolynomial add(const KLPolynomial& a, const KLPolynomial& b) {
    KLPolynomial out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    out.trim();
    return out;
}

KLPolynomial shift(const KLPolynomial& a, long long e) {
    KLPolynomial out;
    if (a.coeffs.empty()) return out;
    out.coeffs.assign(a.coeffs.size() + e, Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i + e] = a.coeffs[i];
    return out;
}

KLPolynomial scale(const KLPolynomial& a, const Int& c) {
    KLPolynomial out = a;
    for (Int& x : out.coeffs) x *= c;
    out.trim();
    return out;
}

Permutation apply_s_left(const Permutation& w, int s) {
    // Left multiplication by the simple transposition (s, s+1) swaps the
    // values s and s+1 in the one-line word.
    Permutation out = w;
    for (int& v : out)
        if (v == s)
            v = s + 1;
        else if (v == s + 1)
            v = s;
    return out;
}

bool left_descent(const Permutation& w, int s) {
    // s is a left descent of w iff s+1 appears before s in the word.
    for (int v : w) {
        if (v == s) return false;
        if (v == s + 1) return true;
    }
    return false;
}

}  // namespace

struct KLContext::Impl {
    int n;
    DescentPolicy policy;
    std::mutex mu;
    std::map<std::pair<std::uint64_t, std::uint64_t>, KLPolynomial> memo;
    KLPolynomial zero, one;

    KLPolynomial compute(const Permutation& x, const Permutation& w,
                         const std::vector<Permutation>& elements) {
        if (!bruhat_leq(x, w)) return zero;
        long long lw = coxeter_length(w);
        long long lx = coxeter_length(x);
        if (lw - lx <= 2) return one;  // P = 1 below the interesting range

        auto key = std::make_pair(pack(x), pack(w));
        {
            std::lock_guard lock(mu);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }

        int s = -1;
        if (policy == DescentPolicy::SmallestIndex) {
            for (int t = 1; t < n; ++t)
                if (left_descent(w, t)) {
                    s = t;
                    break;
                }
        } else {
            for (int t = n - 1; t >= 1; --t)
                if (left_descent(w, t)) {
                    s = t;
                    break;
                }
        }
        Permutation sw = apply_s_left(w, s);
        Permutation sx = apply_s_left(x, s);
        int c = left_descent(x, s) ? 1 : 0;

        // P_{x,w} = q^{1-c} P_{sx,sw} + q^c P_{x,sw}
        //           - sum over x <= z < sw with sz < z of
        //             mu(z,sw) q^{(lw - len(z))/2} P_{x,z}
        KLPolynomial result = add(shift(compute(sx, sw, elements), 1 - c),
                                  shift(compute(x, sw, elements), c));

        std::vector<std::pair<Permutation, long long>> zs;
        for (const Permutation& z : elements) {
            long long lz = coxeter_length(z);
            if (lz >= lw - 1) continue;          // z < sw strictly
            if (!left_descent(z, s)) continue;   // sz < z
            if (!bruhat_leq(x, z)) continue;
            if (!bruhat_leq(z, sw)) continue;
            zs.emplace_back(z, lz);
        }
        for (const auto& [z, lz] : zs) {
            KLPolynomial pzsw = compute(z, sw, elements);
            long long gap = (lw - 1) - lz;  // len(sw) - len(z)
            if (gap % 2 == 0) continue;
            Int muc = pzsw.coeff(static_cast<std::size_t>((gap - 1) / 2));
            if (muc == 0) continue;
            KLPolynomial term =
                scale(shift(compute(x, z, elements), (lw - lz) / 2), muc);
            for (size_t i = 0; i < term.coeffs.size(); ++i) {
                if (result.coeffs.size() <= i) result.coeffs.resize(i + 1, Int(0));
                result.coeffs[i] -= term.coeffs[i];
            }
        }
        result.trim();

        std::lock_guard lock(mu);
        return memo.emplace(key, std::move(result)).first->second;
    }
};

KLContext::KLContext(int n, DescentPolicy policy) : n_(n) {
    if (n < 1) throw precondition_error("KLContext: n must be >= 1");
    if (n > max_kl_window())
        throw resource_error("KLContext: window " + std::to_string(n) +
                             " exceeds OLA_MAX_WINDOW (" +
                             std::to_string(max_kl_window()) + ")");
    impl_ = std::make_shared<Impl>();
    impl_->n = n;
    impl_->policy = policy;
    impl_->one.coeffs = {Int(1)};
    Permutation p = identity_perm(n);
    do {
        elements_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

const KLPolynomial& KLContext::kl_poly(const Permutation& x,
                                       const Permutation& w) {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(w.size()) != n_)
        throw precondition_error("kl_poly: permutations must have size n");
    auto key = std::make_pair(pack(x), pack(w));
    {
        std::lock_guard lock(impl_->mu);
        auto it = impl_->memo.find(key);
        if (it != impl_->memo.end()) return it->second;
    }
    KLPolynomial p = impl_->compute(x, w, elements_);
    std::lock_guard lock(impl_->mu);
    return impl_->memo.emplace(key, std::move(p)).first->second;
}

Int KLContext::mu(const Permutation& x, const Permutation& w) {
    long long gap = coxeter_length(w) - coxeter_length(x);
    if (gap <= 0 || gap % 2 == 0) return 0;
    return kl_poly(x, w).coeff(static_cast<std::size_t>((gap - 1) / 2));
}

}  // namespace ola
