#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace subchi {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "a/b" or "a" (optional leading '-'). Decimal notation is rejected so
// that every value entering the library is exact.
Rational parse_rational(std::string_view text);

// Canonical "a/b" form, or "a" for integers.
std::string to_string(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

// Approximate value for display only; never used in decisions.
double to_double(const Rational& q);

}  // namespace subchi
