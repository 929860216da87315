#ifndef CREDAL_LOGIC_HPP
#define CREDAL_LOGIC_HPP

#include <string>
#include <variant>

#include "credal/independence.hpp"

namespace credal {

// Atomic assertions about a model, each with a strict rational threshold
// where one applies.

// sigma(v) > p.
struct MassAbove {
  OpenSet v;
  Rational p;
};
// Lower conditional endpoint: p < sigma(V1 n O1) / (1 - sigma(O2)).
struct CondAbove {
  EventPair v;
  EventPair o;
  Rational p;
};
// Upper conditional endpoint: 1 - sigma(V2 n O1) / (1 - sigma(O2)) < q.
struct CondBelow {
  EventPair v;
  EventPair o;
  Rational q;
};
// Lower posterior endpoint of the interval Bayes update of h by e.
struct PostAbove {
  EventPair h;
  EventPair e;
  Rational p;
};
struct PostBelow {
  EventPair h;
  EventPair e;
  Rational q;
};
struct Positive {
  EventPair o;
};
struct Classical {
  EventPair o;
};
// Conditional independence of u and v given w on consecutive axis blocks of
// the joint model; `strong` additionally factorizes the outer opens.
struct Independent {
  EventPair u;
  EventPair v;
  EventPair w;
  bool strong = false;
};

using Judgment = std::variant<MassAbove, CondAbove, CondBelow, PostAbove, PostBelow, Positive,
                              Classical, Independent>;

// Semantic truth of a judgment under the model, honouring error bands.
// Throws Indeterminate when the band hides the strict order, and
// PositivityViolation where the judgment's meaning requires positive mass.
bool holds(const Valuation& sigma, const Judgment& j);

// Posterior judgments against interval assessments instead of a model; only
// PostAbove / PostBelow are meaningful here.
bool holds(const BayesAssessment& a, const Judgment& j);

// L1BrokenSelfTest is a deliberately unsound variant of L1 (conclusion
// threshold doubled); the sweep harness must flag it.
enum class RuleId {
  L1,
  L2,
  U1,
  U2,
  B1,
  B2,
  B3,
  B4,
  CI5,
  CI6,
  CI7,
  CI8,
  SI9,
  SI10,
  L1BrokenSelfTest
};

// One rule application: premises in the rule's canonical order. Forward
// rules (L1, U1, B1, B3, CI5, CI7, SI9) compute a conclusion threshold;
// the rest assert grid-checkable or existential conclusions.
struct RuleInstance {
  RuleId id;
  std::vector<Judgment> premises;
  // Event arguments of the conclusion where the premises alone do not carry
  // them (L1/U1 and the broken self-test need {v, o}).
  std::vector<EventPair> events{};
};

// Computes the conclusion of a forward rule from the premise thresholds.
// Throws SchemaMismatch when the premise shapes do not fit the rule.
Judgment apply_forward(const RuleInstance& rule);

struct BackwardReport {
  bool premise_holds = false;
  // Universal rules: every grid point satisfied the disjunction.
  // Existential rules: a witness tuple was found.
  bool verified = false;
  // Witness search exhausted without a certain failure.
  bool inconclusive = false;
  long checked = 0;
  long indeterminate = 0;
  std::vector<Rational> witnesses;
  std::vector<std::string> notes;
};

// Checks a backward rule (L2, U2, B2, B4, CI6, CI8, SI10) against the model
// on the dyadic grid of resolution 2^-grid_depth. L2/U2 are read with the
// free threshold quantified universally over the grid; the existential rules
// search for dyadic witness tuples and report exhaustion as inconclusive.
BackwardReport check_backward(const RuleInstance& rule, const Valuation& sigma, int grid_depth);

struct SweepReport {
  long instances = 0;
  long indeterminate = 0;
  long inconclusive = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Random premise instantiations that hold under the model; forward
// conclusions are then required to hold and backward rules to verify.
// Conditional-independence rules need a product model of dimension >= 3.
SweepReport soundness_sweep(const Valuation& sigma, const std::vector<RuleId>& rules,
                            int n_instances, unsigned seed = 2026);

// Grid approximations of the conditional endpoints: the largest dyadic
// threshold where the lower judgment holds and the smallest where the upper
// one does, each within 2^-grid_depth of the analytic endpoint.
std::pair<Rational, Rational> completeness_approx(const Valuation& sigma, const EventPair& v,
                                                  const EventPair& o, int grid_depth);

// The same bracketing for the posterior endpoints of an interval assessment.
std::pair<Rational, Rational> completeness_approx_posterior(const BayesAssessment& a,
                                                            int grid_depth);

}  // namespace credal

#endif  // CREDAL_LOGIC_HPP
