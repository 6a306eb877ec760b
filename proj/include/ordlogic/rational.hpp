#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>

namespace ordlogic {

// Exact rational arithmetic for all measures, probabilities and
// reliabilities. Denominators stay tiny at desk scale, so long long
// components are plenty.
using Rat = boost::rational<long long>;

// "p/q", or just "p" for integers.
std::string to_string(const Rat& r);

// "p/q (~0.xxxx)" with the decimal approximation to 4 places.
std::string render_approx(const Rat& r);

// Accepts "p/q", "p", and plain decimals like "0.25".
std::optional<Rat> parse_rational(const std::string& text);

// Exact square root when the value is a perfect rational square.
std::optional<Rat> rational_sqrt_exact(const Rat& r);

// Best-effort square root: exact when possible, otherwise a Newton
// approximation with bounded denominator.
Rat rational_sqrt(const Rat& r);

Rat clamp01(const Rat& r);

}  // namespace ordlogic
