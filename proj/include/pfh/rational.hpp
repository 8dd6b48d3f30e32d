#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace pfh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Accepts "p", "p/q" or a finite decimal such as "-0.25".
Rational parse_rational(std::string_view text);

/// Lowest terms, "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
bool is_integer(const Rational& r);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

} // namespace pfh
