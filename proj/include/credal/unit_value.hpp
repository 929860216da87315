#ifndef CREDAL_UNIT_VALUE_HPP
#define CREDAL_UNIT_VALUE_HPP

#include <string>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

enum class Cmp { Less, Equal, Greater, Unordered };

// A numeric estimate with a tracked absolute error bound. err == 0 means the
// value is exact. Approximate values (Beta tails, truncated fat-Cantor mass)
// carry their bound through all arithmetic.
struct Scalar {
  Rational val{0};
  Rational err{0};

  Scalar() = default;
  Scalar(Rational v, Rational e = Rational(0)) : val(std::move(v)), err(std::move(e)) {
    if (err < 0) throw RangeViolation("negative error bound");
  }

  bool is_exact() const { return err == 0; }

  Scalar operator+(const Scalar& o) const { return {val + o.val, err + o.err}; }
  Scalar operator-(const Scalar& o) const { return {val - o.val, err + o.err}; }
  Scalar operator*(const Scalar& o) const {
    return {val * o.val, abs(val) * o.err + abs(o.val) * err + err * o.err};
  }
  // Requires the denominator to be certainly nonzero.
  Scalar operator/(const Scalar& o) const {
    Rational dlo = abs(o.val) - o.err;
    if (dlo <= 0) throw DegenerateDenominator("division by possibly-zero scalar");
    // |a/b - a'/b'| <= (|a| e_b + |b| e_a) / (|b| (|b| - e_b))
    Rational e = (abs(val) * o.err + abs(o.val) * err) / (abs(o.val) * dlo);
    return {val / o.val, e};
  }
};

// Three-valued comparison honouring error bands: Unordered when the bands
// overlap without forcing an order.
Cmp compare(const Scalar& a, const Scalar& b);

// True iff a < b certainly (beyond both error bounds).
bool certainly_less(const Scalar& a, const Scalar& b);
bool certainly_greater(const Scalar& a, const Scalar& b);
// Equality within the combined error bound.
bool approx_equal(const Scalar& a, const Scalar& b);

// A value in [0,1]: an exact rational, or an approximation with a tracked
// absolute error bound (error 0 iff exact).
class UnitValue {
 public:
  UnitValue() = default;

  static UnitValue exact(const Rational& v) {
    check_range(v);
    return UnitValue(Scalar(v));
  }
  static UnitValue approx(const Rational& v, const Rational& err) {
    check_range(v);
    return UnitValue(Scalar(v, err));
  }
  static UnitValue approx(double v, double err) {
    return approx(rational_from_double(v), rational_from_double(err));
  }
  // Clamps the estimate into [0,1]; the bound absorbs the shift.
  static UnitValue clamped(const Scalar& s);

  static UnitValue zero() { return exact(Rational(0)); }
  static UnitValue one() { return exact(Rational(1)); }

  const Rational& value() const { return s_.val; }
  const Rational& error() const { return s_.err; }
  bool is_exact() const { return s_.is_exact(); }
  const Scalar& scalar() const { return s_; }

  UnitValue complement() const { return clamped(Scalar(Rational(1)) - s_); }

  bool operator==(const UnitValue& o) const { return s_.val == o.s_.val && s_.err == o.s_.err; }

 private:
  explicit UnitValue(Scalar s) : s_(std::move(s)) {}
  static void check_range(const Rational& v) {
    if (v < 0 || v > 1) throw RangeViolation("value outside [0,1]: " + rational_to_string(v));
  }
  Scalar s_;
};

}  // namespace credal

#endif  // CREDAL_UNIT_VALUE_HPP
