#ifndef CREDAL_PROB_INTERVAL_HPP
#define CREDAL_PROB_INTERVAL_HPP

#include "credal/unit_value.hpp"

namespace credal {

// A closed subinterval [lo, hi] of [0,1]; the value space of all interval
// probabilities, ordered by reverse inclusion.
struct ProbInterval {
  UnitValue lo;
  UnitValue hi;

  Rational width() const { return hi.value() - lo.value(); }
  bool is_degenerate() const { return lo.value() == hi.value(); }
  bool contains_value(const Rational& x) const { return lo.value() <= x && x <= hi.value(); }

  bool operator==(const ProbInterval& o) const { return lo == o.lo && hi == o.hi; }
};

ProbInterval make_prob_interval(const UnitValue& lo, const UnitValue& hi);

inline ProbInterval make_prob_interval(const Rational& lo, const Rational& hi) {
  return make_prob_interval(UnitValue::exact(lo), UnitValue::exact(hi));
}

// b refines a in the information order iff b is contained in a as a set.
bool interval_refines(const ProbInterval& a, const ProbInterval& b);

// The Bayes posterior map x*y / (x*y + z*(1-x)): nondecreasing in x and y,
// nonincreasing in z.
UnitValue bayes_kernel(const UnitValue& x, const UnitValue& y, const UnitValue& z);

// Sharp interval extension: [f(X.lo, Y.lo, Z.hi), f(X.hi, Y.hi, Z.lo)], the
// exact image of the kernel over the box X x Y x Z.
ProbInterval bayes_kernel_interval(const ProbInterval& x, const ProbInterval& y,
                                   const ProbInterval& z);

}  // namespace credal

#endif  // CREDAL_PROB_INTERVAL_HPP
