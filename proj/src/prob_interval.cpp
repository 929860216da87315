#include "credal/prob_interval.hpp"

namespace credal {

ProbInterval make_prob_interval(const UnitValue& lo, const UnitValue& hi) {
  Cmp c = compare(lo.scalar(), hi.scalar());
  if (c == Cmp::Greater) throw OrderViolation("interval endpoints out of order");
  return ProbInterval{lo, hi};
}

bool interval_refines(const ProbInterval& a, const ProbInterval& b) {
  return a.lo.value() <= b.lo.value() && b.hi.value() <= a.hi.value();
}

UnitValue bayes_kernel(const UnitValue& x, const UnitValue& y, const UnitValue& z) {
  Scalar xy = x.scalar() * y.scalar();
  Scalar den = xy + z.scalar() * (Scalar(Rational(1)) - x.scalar());
  if (den.is_exact() && den.val == 0)
    throw DegenerateDenominator("bayes_kernel: xy + z(1-x) = 0, posterior undefined");
  if (!den.is_exact() && den.val - den.err <= 0)
    throw Indeterminate("bayes_kernel: denominator indistinguishable from zero");
  return UnitValue::clamped(xy / den);
}

ProbInterval bayes_kernel_interval(const ProbInterval& x, const ProbInterval& y,
                                   const ProbInterval& z) {
  UnitValue lo = bayes_kernel(x.lo, y.lo, z.hi);
  UnitValue hi = bayes_kernel(x.hi, y.hi, z.lo);
  return make_prob_interval(lo, hi);
}

}  // namespace credal
