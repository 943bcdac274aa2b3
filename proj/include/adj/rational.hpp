#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace adj {

// All probabilities, weights and numeric values are exact rationals, so
// equality stays decidable end-to-end.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-4/5" and decimal text like "0.125" (parsed digit-wise,
// never through a double). Throws InputError on anything else.
Rational parse_rational(const std::string& text);

// Fixed 12-significant-digit decimal rendering. Deterministic across
// platforms; uses plain notation for exponents in [-4, 11] and scientific
// notation outside that range.
std::string decimal_string(const Rational& r);

std::string rational_string(const Rational& r);  // "n" or "n/d"

BigInt pow10(unsigned exp);

std::optional<std::int64_t> to_int64(const BigInt& n);

}  // namespace adj
