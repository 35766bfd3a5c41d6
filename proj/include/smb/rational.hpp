#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace smb {

/// Exact arbitrary-precision rational (GMP), always kept in canonical form.
using Rational = mpq_class;

/// n/d in canonical form. mpq_class(n, d) alone does not canonicalize.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace smb
