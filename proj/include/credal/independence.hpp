#ifndef CREDAL_INDEPENDENCE_HPP
#define CREDAL_INDEPENDENCE_HPP

#include <string>

#include "credal/inference.hpp"

namespace credal {

// Places a lower-dimensional open set onto the given axes of a larger cube,
// with full extent on the remaining axes.
OpenSet embed_on_axes(const OpenSet& o, int total_dim, const std::vector<int>& axes);
EventPair embed_event_on_axes(const EventPair& e, int total_dim, const std::vector<int>& axes);

// A conditional-independence question about three events sitting on disjoint
// axis blocks of a joint model. Empty axis lists mean consecutive blocks in
// the order u, v, w.
struct CIQuery {
  EventPair u;
  EventPair v;
  EventPair w;  // conditioning event; must be classical with positive mass
  Valuation joint;
  std::vector<int> u_axes{};
  std::vector<int> v_axes{};
  std::vector<int> w_axes{};
  Rational tol{0};  // slack for the factorization equalities
};

// sigma(U1 x V1 | W1) = sigma(U1 | W1) * sigma(V1 | W1), checked in the
// cross-multiplied form so only exact products are compared.
bool check_ci(const CIQuery& q);

// Both the inner (U1, V1) and outer (U2, V2) factorizations.
bool check_strong_ci(const CIQuery& q);

// Lower endpoints multiply; the upper endpoint is the smaller factor bound.
ProbInterval combine_ci_frechet(const ProbInterval& cu, const ProbInterval& cv);
// Both endpoints multiply.
ProbInterval combine_ci_strong(const ProbInterval& cu, const ProbInterval& cv);

enum class GraphoidRule { Symmetry, WeakUnion, Contraction, Intersection };

struct GraphoidReport {
  bool preconditions_ok = true;
  bool premises_hold = false;
  bool conclusion_holds = false;
  std::vector<std::string> notes;
  // A genuine counterexample: preconditions and premises hold, conclusion
  // fails.
  bool counterexample() const {
    return preconditions_ok && premises_hold && !conclusion_holds;
  }
};

// Model-checks one instance of a graphoid rule on a four-block joint model
// with events u, v, w, z on consecutive axis blocks. Classicality of each
// compound conditioning event is evaluated against the event's own factor
// marginal; precondition failures are reported, not thrown.
GraphoidReport validate_graphoid(GraphoidRule rule, const Valuation& joint, const EventPair& u,
                                 const EventPair& v, const EventPair& w, const EventPair& z,
                                 const Rational& tol = Rational(0));

}  // namespace credal

#endif  // CREDAL_INDEPENDENCE_HPP
