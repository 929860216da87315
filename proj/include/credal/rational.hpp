#ifndef CREDAL_RATIONAL_HPP
#define CREDAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace credal {

// Exact arbitrary-precision rational, the workhorse of every endpoint formula.
using Rational = mpq_class;

// Parses "num/den", plain integers, and exact decimal strings like "0.25".
Rational parse_rational(const std::string& text);

// Canonical "num/den" form ("num" when the denominator is 1).
std::string rational_to_string(const Rational& q);

// Exact conversion; every binary64 is a rational.
Rational rational_from_double(double x);

double to_double(const Rational& q);

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace credal

#endif  // CREDAL_RATIONAL_HPP
