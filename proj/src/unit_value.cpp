#include "credal/unit_value.hpp"

namespace credal {

Cmp compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.val, b.val);
    return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
  }
  if (a.val + a.err < b.val - b.err) return Cmp::Less;
  if (a.val - a.err > b.val + b.err) return Cmp::Greater;
  return Cmp::Unordered;
}

bool certainly_less(const Scalar& a, const Scalar& b) { return compare(a, b) == Cmp::Less; }

bool certainly_greater(const Scalar& a, const Scalar& b) { return compare(a, b) == Cmp::Greater; }

bool approx_equal(const Scalar& a, const Scalar& b) {
  return abs(a.val - b.val) <= a.err + b.err;
}

UnitValue UnitValue::clamped(const Scalar& s) {
  Rational v = s.val;
  Rational e = s.err;
  if (v < 0) {
    e += -v;
    v = 0;
  } else if (v > 1) {
    e += v - 1;
    v = 1;
  }
  return UnitValue(Scalar(v, e));
}

}  // namespace credal
