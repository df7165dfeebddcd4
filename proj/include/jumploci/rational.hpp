#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace jumploci {

// Exact rational scalar over arbitrary-precision integers. The backend keeps
// every value in lowest terms with a positive denominator; there is no
// floating point anywhere in the engine.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

/// Parses both canonical forms; throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

} // namespace jumploci
