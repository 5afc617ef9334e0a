#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace tokenslide {

// Exact coordinate arithmetic. Endpoints are compared symbolically, never as
// floating point, so adjacency decisions cannot be perturbed by rounding.
using Rational = boost::rational<long long>;

// Accepts "p", "-p", "p/q" with optional sign on p; q must be positive.
// Throws InputError on anything else (including "1.5").
Rational parse_rational(const std::string& text);

// Prints "p" when the denominator is 1, else "p/q" in lowest terms.
std::string format_rational(const Rational& value);

} // namespace tokenslide
