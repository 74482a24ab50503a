#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pafdp {

/// Exact probability value: reduced fraction of arbitrary-precision integers.
using Rational = mpq_class;

/// Parses a plain decimal literal ("1", "0.25", ".5") into an exact fraction.
/// Returns nullopt for anything else (signs, exponents, fractions, junk).
std::optional<Rational> parse_decimal(std::string_view text);

/// Exact shortest decimal spelling of a value whose denominator is of the
/// form 2^i 5^j. Returns nullopt for values without a finite expansion.
std::optional<std::string> exact_decimal(const Rational& value);

/// "p/q", or just "p" for integers.
std::string fraction_string(const Rational& value);

/// Decimal rendering with `digits` significant digits (no binary64 detour,
/// so values far below DBL_MIN still print correctly).
std::string significant_decimal(const Rational& value, int digits = 15);
std::string significant_decimal(double value, int digits = 15);

}  // namespace pafdp
