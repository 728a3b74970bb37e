#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tropscatter {

// Exact arithmetic everywhere. Coefficients are rationals because exp/log
// introduce factorials; integrality of assembled counts is observed, not
// assumed.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on contract violations (bad preconditions, inconsistent inputs).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed external input (JSON, CLI arguments).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b)
{
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Rational make_rational(const Int& num, const Int& den)
{
    if (den == 0) throw Error("rational with zero denominator");
    return Rational(num, den);
}

}  // namespace tropscatter
