#include "ola/weight.hpp"

#include <sstream>

#include "chain_internal.hpp"

namespace ola {

std::string to_string(LieFlavor f) {
    switch (f) {
        case LieFlavor::SL: return "sl";
        case LieFlavor::O: return "o";
        case LieFlavor::SP: return "sp";
    }
    return "?";
}

LieFlavor flavor_from_string(const std::string& s) {
    if (s == "sl") return LieFlavor::SL;
    if (s == "o") return LieFlavor::O;
    if (s == "sp") return LieFlavor::SP;
    throw parse_error("unknown flavor '" + s + "' (expected sl, o, sp)");
}

static void check_index(LieFlavor f, int index) {
    if (index == 0)
        throw precondition_error("chain index 0 is invalid");
    if (index < 0 && f != LieFlavor::SL)
        throw precondition_error(
            "negative chain index invalid for flavor " + to_string(f));
}

Weight::Weight(LieFlavor flavor, std::map<int, Rat> entries)
    : flavor_(flavor) {
    for (auto& [i, c] : entries) {
        check_index(flavor, i);
        if (c != 0) entries_.emplace(i, std::move(c));
    }
}

Rat Weight::at(int index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? Rat(0) : it->second;
}

void Weight::set(int index, Rat value) {
    check_index(flavor_, index);
    if (value == 0)
        entries_.erase(index);
    else
        entries_[index] = std::move(value);
}

bool Weight::is_integral() const {
    for (const auto& [i, c] : entries_)
        if (!is_integer(c)) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    if (flavor_ != o.flavor_)
        throw precondition_error("flavor mismatch in weight addition");
    Weight r = *this;
    for (const auto& [i, c] : o.entries_) r.set(i, r.at(i) + c);
    return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Weight r(flavor_);
    for (const auto& [i, c] : entries_) r.set(i, -c);
    return r;
}

Rat rho(LieFlavor flavor, int index) {
    check_index(flavor, index);
    // -i on the L side; +i at SL index -i (chain order ... < -2 < -1).
    return Rat(-index);
}

Rat degree(const Weight& w) {
    Rat s(0);
    for (const auto& [i, c] : w.entries()) s += (i > 0) ? c : -c;
    return s / 2;
}

namespace detail {

std::vector<Rat> chain_dense(const Weight& w, bool r_side) {
    std::vector<Rat> v;
    for (const auto& [i, c] : w.entries()) {
        if (r_side != (i < 0)) continue;
        int p = r_side ? -i : i;
        if ((size_t)p > v.size()) v.resize(p, Rat(0));
        v[p - 1] = r_side ? -c : c;
    }
    return v;
}

void chain_store(Weight& w, bool r_side, const std::vector<Rat>& v) {
    for (size_t p = 1; p <= v.size(); ++p) {
        int index = r_side ? -static_cast<int>(p) : static_cast<int>(p);
        w.set(index, r_side ? -v[p - 1] : v[p - 1]);
    }
}

bool chain_is_partition(const std::vector<Rat>& v) {
    Rat prev;
    bool first = true;
    for (const Rat& c : v) {
        if (!is_integer(c) || c < 0) return false;
        if (!first && c > prev) return false;
        prev = c;
        first = false;
    }
    // trailing (implicit) zeros are fine iff the last listed entry is the
    // minimum, which weak decrease to >= 0 already guarantees
    return true;
}

bool chain_nonneg_prefixes(const std::vector<Rat>& v) {
    Rat run(0);
    for (const Rat& c : v) {
        if (!is_integer(c)) return false;
        run += c;
        if (run < 0) return false;
    }
    return run == 0;
}

}  // namespace detail

using detail::chain_dense;
using detail::chain_is_partition;
using detail::chain_nonneg_prefixes;

bool is_b_dominant(const Weight& w) {
    if (!chain_is_partition(chain_dense(w, false))) return false;
    if (w.flavor() == LieFlavor::SL &&
        !chain_is_partition(chain_dense(w, true)))
        return false;
    return true;
}

bool is_nonneg_simple_combination(const Weight& diff) {
    if (!chain_nonneg_prefixes(chain_dense(diff, false))) return false;
    if (diff.flavor() == LieFlavor::SL &&
        !chain_nonneg_prefixes(chain_dense(diff, true)))
        return false;
    return true;
}

BlockLabel block_label(const Weight& w) {
    BlockLabel lbl;
    lbl.flavor = w.flavor();
    Rat sum(0);
    Int floors(0);
    for (const auto& [i, c] : w.entries()) {
        Rat f = frac_rat(c);
        if (f != 0) lbl.fractional.emplace(i, f);
        sum += c;
        floors += floor_rat(c);
    }
    if (w.flavor() == LieFlavor::SL) {
        lbl.sl_sum = sum;
    } else {
        lbl.parity = static_cast<int>(floors % 2 != 0);
    }
    return lbl;
}

bool same_block(const Weight& a, const Weight& b) {
    if (a.flavor() != b.flavor())
        throw precondition_error("flavor mismatch in block comparison");
    return block_label(a) == block_label(b);
}

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw parse_error("bad rational '" + text + "'");
    }
}

Weight parse_weight(LieFlavor flavor, const std::string& text) {
    Weight w(flavor);
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return w;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected index:coefficient, got '" + item + "'");
        int index;
        try {
            index = std::stoi(item.substr(0, colon));
        } catch (const std::exception&) {
            throw parse_error("bad chain index in '" + item + "'");
        }
        if (index == 0) throw parse_error("chain index 0 is invalid");
        if (index < 0 && flavor != LieFlavor::SL)
            throw parse_error("negative index invalid for flavor " +
                              to_string(flavor));
        if (w.entries().contains(index))
            throw parse_error("duplicate index " + std::to_string(index));
        w.set(index, parse_rational(item.substr(colon + 1)));
    }
    return w;
}

std::string to_string(const Weight& w) {
    std::string out;
    for (const auto& [i, c] : w.entries()) {
        if (!out.empty()) out += ',';
        out += std::to_string(i) + ':' + to_string(c);
    }
    return out;
}

}  // namespace ola
