#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace blp {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using RatVector = std::vector<Rat>;

/// Parses the rational literal syntax shared by every file format in this
/// repo: optional sign, decimal integer, optionally '/' and a positive
/// decimal integer (e.g. `-3/4`, `7`). No decimals, no exponents.
/// Throws std::invalid_argument on anything else.
Rat parse_rational(const std::string& token);

/// Renders a rational as `p/q`, or just `p` when the denominator is 1.
std::string to_string(const Rat& value);

/// Exact n! as an arbitrary-precision integer.
Int factorial(unsigned n);

/// base^exponent with the convention base^0 = 1 (also for base 0).
Rat rat_pow(const Rat& base, unsigned exponent);

/// Least common multiple of all denominators; 1 for empty input.
Int lcm_denominators(const RatVector& values);

}  // namespace blp
