#ifndef CREDAL_VALUATION_HPP
#define CREDAL_VALUATION_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "credal/open_set.hpp"
#include "credal/unit_value.hpp"

namespace credal {

class Valuation;

struct LebesgueLaw {};

// Step density on [0,1]: weights[i] is the total mass of (breaks[i],
// breaks[i+1]), spread uniformly.
struct PiecewiseDensityLaw {
  std::vector<Rational> breaks;   // strictly increasing, first 0, last 1
  std::vector<Rational> weights;  // size breaks.size()-1, nonnegative, sum 1
};

struct BetaLaw {
  double alpha;
  double beta;
  double tol;  // absolute tolerance per CDF call
};

// Fat Cantor measure with parameter r: the scheme of the standard middle
// thirds construction, with stage k removing 2^(k-1) centred open intervals
// of absolute length r/3^k each. Mass sits on the residual set: Lebesgue
// density on it plus an atom of half the removed length at each removed
// interval endpoint. Evaluation truncates the construction at `depth`;
// inside a surviving stage-`depth` interval the mass distribution is only
// known in aggregate, so results cut through one carry an error bound.
struct FatCantorLaw {
  Rational r;
  int depth;
  struct Atom {
    Rational pos;
    Rational mass;
  };
  std::vector<ClosedIval> leaves;  // surviving closed intervals at `depth`
  std::vector<Atom> atoms;         // endpoint atoms of all removed intervals
};

struct DiscreteLaw {
  std::vector<Rational> p;  // nonnegative, sums to 1
};

struct MixtureLaw {
  std::vector<std::pair<Rational, Valuation>> parts;  // weights sum to 1
};

struct ProductLaw {
  std::vector<Valuation> factors;  // each one-dimensional
};

using ValuationLaw = std::variant<LebesgueLaw, PiecewiseDensityLaw, BetaLaw, FatCantorLaw,
                                  DiscreteLaw, MixtureLaw, ProductLaw>;

// A probability valuation evaluable on open sets. Immutable; total mass of
// the full space is 1 (exactly for rational laws, within tolerance for Beta).
class Valuation {
 public:
  static Valuation lebesgue(int dim = 1);
  static Valuation piecewise(std::vector<Rational> breaks, std::vector<Rational> weights);
  static Valuation beta(double alpha, double beta, double tol = 1e-12);
  static Valuation fat_cantor(const Rational& r, int depth);
  static Valuation discrete(std::vector<Rational> p);
  static Valuation mixture(std::vector<std::pair<Rational, Valuation>> parts);
  static Valuation product(std::vector<Valuation> factors);

  const SpaceDescriptor& space() const { return space_; }
  const ValuationLaw& law() const { return *law_; }

 private:
  Valuation(SpaceDescriptor s, ValuationLaw l)
      : space_(s), law_(std::make_shared<ValuationLaw>(std::move(l))) {}
  SpaceDescriptor space_;
  std::shared_ptr<const ValuationLaw> law_;
};

struct EvalResult {
  UnitValue value;
};

// Measure of an open set under the valuation, with a tracked error bound
// (zero for the exact rational laws away from truncation cuts).
EvalResult eval_open(const Valuation& sigma, const OpenSet& o);

// I_x(alpha, beta) to absolute tolerance tol, by continued fraction with the
// symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
UnitValue regularized_incomplete_beta(double alpha, double beta, double x, double tol = 1e-12);

// Exact mass 1 - r + r (2/3)^n of the stage-n surviving layer.
UnitValue fat_cantor_open_layer(const Rational& r, int n);

// The stage-n layer itself: the union of the interiors of the 2^n surviving
// closed intervals.
OpenSet fat_cantor_layer_open_set(const Rational& r, int n);

// The open intervals removed through stage n.
OpenSet fat_cantor_removed_open_set(const Rational& r, int n);

// sigma(u) + sigma(v) = sigma(u union v) + sigma(u intersect v), within the
// combined error bounds.
bool check_modularity(const Valuation& sigma, const OpenSet& u, const OpenSet& v);

struct GAxiomReport {
  long instances_checked = 0;
  long indeterminate = 0;  // skipped because an error band hid the order
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Instantiates the threshold relation {(v,p) : p < sigma(v)} on the sampled
// basis opens and checks its defining axioms: the full space passes every
// threshold, the empty set none, monotonicity in both arguments, existence
// of a way-below interpolant with a higher threshold, and the two modular
// exchange laws.
GAxiomReport check_G_axioms(const Valuation& sigma, const std::vector<OpenSet>& basis_sample,
                            const std::vector<Rational>& threshold_grid);

}  // namespace credal

#endif  // CREDAL_VALUATION_HPP
