#include "credal/inference.hpp"

#include "credal/errors.hpp"

namespace credal {

bool pos_check(const Valuation& sigma, const EventPair& o) {
  require_same_space(sigma.space(), o.space(), "pos_check");
  Scalar m = eval_open(sigma, o.o1()).value.scalar();
  if (m.val - m.err > 0) return true;
  if (m.is_exact()) return false;  // exactly zero
  throw Indeterminate("pos_check: mass indistinguishable from zero");
}

bool ce_check(const Valuation& sigma, const EventPair& o) {
  require_same_space(sigma.space(), o.space(), "ce_check");
  Scalar total =
      eval_open(sigma, o.o1()).value.scalar() + eval_open(sigma, o.o2()).value.scalar();
  Rational defect = abs(Rational(1) - total.val);
  if (defect <= total.err) return true;
  if (total.err > 0 && defect <= 2 * total.err)
    throw Indeterminate("ce_check: defect of the order of the error bound");
  return false;
}

ProbInterval cond_prob(const Valuation& sigma, const EventPair& v, const EventPair& o) {
  require_same_space(sigma.space(), v.space(), "cond_prob");
  require_same_space(sigma.space(), o.space(), "cond_prob");
  if (!pos_check(sigma, o))
    throw PositivityViolation("cond_prob: conditioning event has zero inner mass");
  Scalar den = Scalar(Rational(1)) - eval_open(sigma, o.o2()).value.scalar();
  Scalar lo = eval_open(sigma, os_intersect(v.o1(), o.o1())).value.scalar() / den;
  Scalar hi = Scalar(Rational(1)) -
              eval_open(sigma, os_intersect(v.o2(), o.o1())).value.scalar() / den;
  return make_prob_interval(UnitValue::clamped(lo), UnitValue::clamped(hi));
}

ProbInterval cond_prob_joint(const Valuation& sigma_joint, const EventPair& u,
                             const EventPair& v) {
  if (!sigma_joint.space().is_cube() || !u.space().is_cube() || !v.space().is_cube())
    throw SpaceMismatch("cond_prob_joint requires cube spaces");
  if (sigma_joint.space().extent != u.space().extent + v.space().extent)
    throw SpaceMismatch("cond_prob_joint: factor dimensions do not add up");
  OpenSet full1 = OpenSet::full(u.space());
  Scalar v_inner = eval_open(sigma_joint, os_product(full1, v.o1())).value.scalar();
  if (!(v_inner.val - v_inner.err > 0)) {
    if (v_inner.is_exact())
      throw PositivityViolation("cond_prob_joint: conditioning marginal has zero inner mass");
    throw Indeterminate("cond_prob_joint: conditioning mass indistinguishable from zero");
  }
  Scalar den =
      Scalar(Rational(1)) - eval_open(sigma_joint, os_product(full1, v.o2())).value.scalar();
  Scalar lo = eval_open(sigma_joint, os_product(u.o1(), v.o1())).value.scalar() / den;
  Scalar hi = Scalar(Rational(1)) -
              eval_open(sigma_joint, os_product(u.o2(), v.o1())).value.scalar() / den;
  return make_prob_interval(UnitValue::clamped(lo), UnitValue::clamped(hi));
}

ProbInterval bayes_update(const Valuation& sigma, const EventPair& h, const EventPair& e) {
  if (!pos_check(sigma, h))
    throw PositivityViolation("bayes_update: hypothesis has zero inner mass");
  EventPair not_h = event_negate(h);
  if (!pos_check(sigma, not_h))
    throw PositivityViolation("bayes_update: negated hypothesis has zero inner mass");
  BayesAssessment a{event_probability(sigma, h), cond_prob(sigma, e, h),
                    cond_prob(sigma, e, not_h)};
  return bayes_from_assessment(a);
}

ProbInterval bayes_from_assessment(const BayesAssessment& a) {
  return bayes_kernel_interval(a.prior, a.likelihood, a.alt_likelihood);
}

}  // namespace credal
