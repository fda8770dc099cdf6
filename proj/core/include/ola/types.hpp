#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ola {

/// Exact arbitrary-precision integer and rational scalars. Every public
/// computation in this library is decided by integrality and equality
/// tests, so exact arithmetic is non-negotiable.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A stated precondition of an operation was violated by the caller.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A configured resource bound (window size, cache limit, oracle size cap)
/// was exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Malformed textual input (weight/partition/permutation/label syntax).
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what)
        : std::invalid_argument(what) {}
};

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int floor_rat(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// Fractional part in [0,1).
inline Rat frac_rat(const Rat& r) { return r - Rat(floor_rat(r)); }

}  // namespace ola
