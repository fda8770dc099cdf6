#include "ola/annihilator.hpp"

#include <algorithm>

#include "chain_internal.hpp"

namespace ola {

std::string to_string(const PrimitiveIdealLabel& l) {
    return "I(x=" + std::to_string(l.x) + ", y=" + std::to_string(l.y) +
           ", Yl=" + to_string(l.yl) + ", Yr=" + to_string(l.yr) + ")";
}

PrimitiveIdealLabel parse_label(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 4 || s.substr(0, 2) != "I(" || s.back() != ')')
        throw parse_error("label syntax is I(x=.., y=.., Yl=[..], Yr=[..])");
    s = s.substr(2, s.size() - 3);

    auto take = [&](const std::string& key) -> std::string {
        auto pos = s.find(key + "=");
        if (pos == std::string::npos)
            throw parse_error("label missing field '" + key + "'");
        size_t start = pos + key.size() + 1;
        size_t end = start;
        int depth = 0;
        while (end < s.size() && (depth > 0 || s[end] != ',')) {
            if (s[end] == '[') ++depth;
            if (s[end] == ']') --depth;
            ++end;
        }
        return s.substr(start, end - start);
    };

    PrimitiveIdealLabel l;
    try {
        l.x = std::stoll(take("x"));
        l.y = std::stoll(take("y"));
    } catch (const std::exception&) {
        throw parse_error("bad integer field in label '" + text + "'");
    }
    l.yl = parse_partition(take("Yl"));
    l.yr = parse_partition(take("Yr"));
    if (l.x < 0 || l.y < 0)
        throw parse_error("label fields x, y must be nonnegative");
    return l;
}

PrimitiveIdealLabel annihilator_of_integrable(const Weight& lam) {
    if (lam.flavor() != LieFlavor::SL)
        throw precondition_error(
            "annihilator_of_integrable: SL flavor required");
    if (!is_b_dominant(lam))
        throw precondition_error(
            "annihilator_of_integrable: weight is not b-dominant");
    auto as_parts = [](const std::vector<Rat>& chain) {
        std::vector<long long> parts;
        for (const Rat& c : chain)
            parts.push_back(static_cast<long long>(numerator(c)));
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    };
    PrimitiveIdealLabel l;
    l.yl = as_parts(detail::chain_dense(lam, false));
    l.yr = as_parts(detail::chain_dense(lam, true));
    return l;
}

Weight weight_from_label(long long x, const Partition& yl, const Partition& yr,
                         const std::vector<Rat>& a) {
    if (x < 0) throw precondition_error("weight_from_label: x must be >= 0");
    if (static_cast<long long>(a.size()) != x)
        throw precondition_error("weight_from_label: need exactly x entries a_i");
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_integer(a[i]))
            throw precondition_error("weight_from_label: a_i must be non-integral");
        for (size_t j = i + 1; j < a.size(); ++j)
            if (is_integer(a[i] - a[j]))
                throw precondition_error(
                    "weight_from_label: a_i - a_j must be non-integral");
    }
    Weight w(LieFlavor::SL);
    for (size_t i = 0; i < a.size(); ++i) w.set(static_cast<int>(i + 1), a[i]);
    const auto& ylp = yl.parts();
    for (size_t i = 0; i < ylp.size(); ++i)
        w.set(static_cast<int>(x + i + 1), Rat(ylp[i]));
    const auto& yrp = yr.parts();
    size_t s = yrp.size();
    for (size_t i = 1; i <= s; ++i)
        w.set(-static_cast<int>(i), Rat(-yrp[s - i]));
    return w;
}

bool is_nonzero_annihilator_guaranteed(long long module_length) {
    if (module_length <= 0)
        throw precondition_error("module length must be positive");
    return true;
}

}  // namespace ola
