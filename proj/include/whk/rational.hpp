#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace whk {

/// Exact rational scalar. Canonical form (positive denominator, lowest
/// terms) is maintained by the backend; no operation ever rounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;

/// num/den with sign normalization; throws ParseError on den = 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "p/q", or "-p/q". Throws ParseError on malformed input or q = 0.
Rational rational_from_string(const std::string& s);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

}  // namespace whk
