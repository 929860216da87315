#include "credal/credal_set.hpp"

#include "credal/errors.hpp"

namespace credal {

namespace {

// Band-aware minimum by central value; the chosen bound travels along.
Scalar min_scalar(const Scalar& a, const Scalar& b) { return b.val < a.val ? b : a; }
Scalar max_scalar(const Scalar& a, const Scalar& b) { return b.val > a.val ? b : a; }

}  // namespace

CredalSet CredalSet::make(std::vector<Valuation> vertices) {
  if (vertices.empty()) throw RangeViolation("credal set needs at least one vertex");
  for (const auto& v : vertices)
    require_same_space(vertices.front().space(), v.space(), "CredalSet");
  return CredalSet(std::move(vertices));
}

ProbInterval credal_event_probability(const CredalSet& k, const EventPair& e) {
  require_same_space(k.space(), e.space(), "credal_event_probability");
  Scalar lo = eval_open(k.vertices().front(), e.o1()).value.scalar();
  Scalar out = eval_open(k.vertices().front(), e.o2()).value.scalar();
  for (std::size_t i = 1; i < k.vertices().size(); ++i) {
    lo = min_scalar(lo, eval_open(k.vertices()[i], e.o1()).value.scalar());
    out = min_scalar(out, eval_open(k.vertices()[i], e.o2()).value.scalar());
  }
  return make_prob_interval(UnitValue::clamped(lo),
                            UnitValue::clamped(Scalar(Rational(1)) - out));
}

ProbInterval credal_conditional(const CredalSet& k, const EventPair& v, const EventPair& o) {
  require_same_space(k.space(), v.space(), "credal_conditional");
  require_same_space(k.space(), o.space(), "credal_conditional");
  bool first = true;
  Scalar lo(Rational(0)), hi(Rational(0));
  for (std::size_t i = 0; i < k.vertices().size(); ++i) {
    const Valuation& sigma = k.vertices()[i];
    Scalar inner = eval_open(sigma, o.o1()).value.scalar();
    if (!(inner.val - inner.err > 0))
      throw PositivityViolation("credal_conditional: vertex " + std::to_string(i) +
                                " puts no mass on the conditioning event");
    Scalar den = Scalar(Rational(1)) - eval_open(sigma, o.o2()).value.scalar();
    Scalar vlo = eval_open(sigma, os_intersect(v.o1(), o.o1())).value.scalar() / den;
    Scalar vhi = Scalar(Rational(1)) -
                 eval_open(sigma, os_intersect(v.o2(), o.o1())).value.scalar() / den;
    lo = first ? vlo : min_scalar(lo, vlo);
    hi = first ? vhi : max_scalar(hi, vhi);
    first = false;
  }
  return make_prob_interval(UnitValue::clamped(lo), UnitValue::clamped(hi));
}

ProbInterval credal_bayes(const std::vector<BayesAssessment>& assessments) {
  if (assessments.empty()) throw RangeViolation("credal_bayes needs at least one assessment");
  bool first = true;
  Scalar lo(Rational(0)), hi(Rational(0));
  for (std::size_t i = 0; i < assessments.size(); ++i) {
    ProbInterval iv;
    try {
      iv = bayes_from_assessment(assessments[i]);
    } catch (const DegenerateDenominator&) {
      throw DegenerateDenominator("credal_bayes: vertex " + std::to_string(i) +
                                  " has a degenerate posterior denominator");
    }
    lo = first ? iv.lo.scalar() : min_scalar(lo, iv.lo.scalar());
    hi = first ? iv.hi.scalar() : max_scalar(hi, iv.hi.scalar());
    first = false;
  }
  return make_prob_interval(UnitValue::clamped(lo), UnitValue::clamped(hi));
}

ProbInterval credal_bayes(const CredalSet& k, const EventPair& h,
                          const std::vector<ProbInterval>& e_given_h,
                          const std::vector<ProbInterval>& e_given_not_h) {
  if (e_given_h.size() != k.vertices().size() || e_given_not_h.size() != k.vertices().size())
    throw RangeViolation("credal_bayes: one likelihood pair per vertex required");
  std::vector<BayesAssessment> as;
  for (std::size_t i = 0; i < k.vertices().size(); ++i)
    as.push_back({event_probability(k.vertices()[i], h), e_given_h[i], e_given_not_h[i]});
  return credal_bayes(as);
}

ProbInterval credal_bayes_joint(const CredalSet& k, const EventPair& h, const EventPair& e) {
  std::vector<BayesAssessment> as;
  for (std::size_t i = 0; i < k.vertices().size(); ++i) {
    const Valuation& sigma = k.vertices()[i];
    EventPair not_h = event_negate(h);
    try {
      as.push_back({event_probability(sigma, h), cond_prob(sigma, e, h),
                    cond_prob(sigma, e, not_h)});
    } catch (const PositivityViolation&) {
      throw PositivityViolation("credal_bayes_joint: vertex " + std::to_string(i) +
                                " fails the positivity precondition");
    }
  }
  return credal_bayes(as);
}

}  // namespace credal
