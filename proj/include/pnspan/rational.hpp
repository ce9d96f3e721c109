#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pnspan {

/// Exact rational scalar. Always kept in canonical form.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers are printed as "p/1" so that the text
/// always identifies an exact value.
std::string to_fraction_string(const Rational& r);

inline Rational make_rational(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace pnspan
