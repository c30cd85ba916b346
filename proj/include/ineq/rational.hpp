#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ineq {

// Arbitrary precision rational; GMP keeps results in lowest terms with a
// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "3", "-1/2", "0".
std::string to_string(const Rational& q);

// Accepts "int", "int/int" or a terminating decimal, with an optional sign.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

// Exact binary value of a finite double.
Rational exact_from_double(double x);

// Square root when q is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& q);

double sqrt_to_double(const Rational& q);

bool is_integer(const Rational& q);

} // namespace ineq
