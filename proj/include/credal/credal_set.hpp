#ifndef CREDAL_CREDAL_SET_HPP
#define CREDAL_CREDAL_SET_HPP

#include "credal/inference.hpp"

namespace credal {

// A credal set given by the vertices of its polytope of valuations; envelopes
// are minimized/maximized over the vertices.
class CredalSet {
 public:
  static CredalSet make(std::vector<Valuation> vertices);

  const std::vector<Valuation>& vertices() const { return vertices_; }
  const SpaceDescriptor& space() const { return vertices_.front().space(); }

 private:
  explicit CredalSet(std::vector<Valuation> v) : vertices_(std::move(v)) {}
  std::vector<Valuation> vertices_;
};

// Lower/upper envelope of the event probability:
//   [ min_i sigma_i(o1), 1 - min_i sigma_i(o2) ].
ProbInterval credal_event_probability(const CredalSet& k, const EventPair& e);

// Envelope of the conditional interval over the vertices; every vertex must
// put positive mass on the conditioning inner open.
ProbInterval credal_conditional(const CredalSet& k, const EventPair& v, const EventPair& o);

// Interval Bayes over explicit per-vertex assessments:
//   [ min_i f(prior.lo, like.lo, alt.hi), max_i f(prior.hi, like.hi, alt.lo) ]
// with f the posterior kernel.
ProbInterval credal_bayes(const std::vector<BayesAssessment>& assessments);

// Per-vertex likelihood intervals with the priors taken from the model.
ProbInterval credal_bayes(const CredalSet& k, const EventPair& h,
                          const std::vector<ProbInterval>& e_given_h,
                          const std::vector<ProbInterval>& e_given_not_h);

// Convenience form when a full joint model exists per vertex.
ProbInterval credal_bayes_joint(const CredalSet& k, const EventPair& h, const EventPair& e);

}  // namespace credal

#endif  // CREDAL_CREDAL_SET_HPP
