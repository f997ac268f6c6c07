#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace bisect {

// All weights, probabilities and bounds are exact rationals end-to-end;
// guarantee checks are exact comparisons, never float tolerances.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "p/q", integers, and plain decimals like "3.25" or ".5".
Rational parse_rational(const std::string& text);

// Canonical lowest-terms "p/q" form, denominator always explicit ("5/1").
std::string to_pq_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace bisect
