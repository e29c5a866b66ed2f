#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gnlat {

// Exact arithmetic over Q. GMP's canonical form matches our invariants:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rational& q);

// Strict parser for "p" / "p/q" with decimal digits and optional leading '-'
// on the numerator. Rejects anything else (signs on q, whitespace, empty
// parts). The result is canonicalized.
std::optional<Rational> parse_rational(const std::string& s);

}  // namespace gnlat
