#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mcolour {

/// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses `p/q`, an integer, or a plain decimal such as `0.375` into an exact rational.
/// Throws ParseError (line 0) on anything else.
Rational parse_rational(std::string_view text);

/// `p/q` in lowest terms, or just `p` when the denominator is 1.
std::string format_rational(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace mcolour
