#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace rado {

using Integer = boost::multiprecision::cpp_int;
// Always canonical: positive denominator, lowest terms, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;
// 50 significant decimal digits; used only at reporting boundaries.
using Decimal = boost::multiprecision::cpp_dec_float_50;

// 128-bit helpers for overflow-free products of 64-bit values.
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

inline constexpr int kDecimalDigits = 50;

// "a" or "a/b".
std::string to_string(const Rational& value);

// Accepts integers, fractions "a/b" and plain decimals "0.125" / "1e-3".
// Every accepted literal is converted exactly.
Rational parse_rational(std::string_view text);

Decimal to_decimal(const Rational& value);

// Shortest round-trip-free rendering with kDecimalDigits significant digits.
std::string to_decimal_string(const Decimal& value, int digits = kDecimalDigits);

// Exact rational value of a decimal literal (as produced by to_decimal_string).
Rational decimal_to_rational(const Decimal& value, int digits = kDecimalDigits);

// base^exponent for a rational exponent, evaluated to kDecimalDigits.
Decimal pow_rational(const Rational& base, const Rational& exponent);

Integer factorial(unsigned n);

Rational pow(const Rational& base, unsigned exponent);

bool is_integer(const Rational& value);

}  // namespace rado
