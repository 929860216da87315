#ifndef CREDAL_INFERENCE_HPP
#define CREDAL_INFERENCE_HPP

#include "credal/event_pair.hpp"

namespace credal {

// The three interval assessments feeding the interval Bayes rule.
struct BayesAssessment {
  ProbInterval prior;           // [p_h, q_h]
  ProbInterval likelihood;      // [p_e|h, q_e|h]
  ProbInterval alt_likelihood;  // [p_e|~h, q_e|~h]
};

// sigma(o.o1) > 0, strictly beyond the tracked error bound. Throws
// Indeterminate when 0 lies inside the band.
bool pos_check(const Valuation& sigma, const EventPair& o);

// Classicality: sigma(o.o1) + sigma(o.o2) = 1 within the combined error
// bound. Throws Indeterminate when the defect is of the same order as the
// bound (between one and two times it).
bool ce_check(const Valuation& sigma, const EventPair& o);

// Interval conditional probability
//   [ sigma(V1 n O1) / (1 - sigma(O2)), 1 - sigma(V2 n O1) / (1 - sigma(O2)) ].
ProbInterval cond_prob(const Valuation& sigma, const EventPair& v, const EventPair& o);

// Conditional across the factors of a product space, with u on the first
// factor block and v on the second; denominators use the marginal of v:
//   [ sigma(U1 x V1) / (1 - sigma(D1 x V2)), 1 - sigma(U2 x V1) / (1 - sigma(D1 x V2)) ].
ProbInterval cond_prob_joint(const Valuation& sigma_joint, const EventPair& u,
                             const EventPair& v);

// Assembles prior = P(h), likelihood = C(e|h), alt = C(e|~h) from the model
// and applies the sharp interval Bayes kernel.
ProbInterval bayes_update(const Valuation& sigma, const EventPair& h, const EventPair& e);

ProbInterval bayes_from_assessment(const BayesAssessment& a);

}  // namespace credal

#endif  // CREDAL_INFERENCE_HPP
