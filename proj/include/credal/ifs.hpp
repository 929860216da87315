#ifndef CREDAL_IFS_HPP
#define CREDAL_IFS_HPP

#include <optional>

#include "credal/event_pair.hpp"

namespace credal {

// x -> a x + b with |a| < 1, mapping [0,1] into itself.
struct AffineMap {
  Rational a;
  Rational b;
};

// Interval weight for one map.
struct WeightBound {
  Rational lo;
  Rational hi;
};

// An iterated function system on [0,1] with interval weights. The admissible
// weight vectors form the probability simplex cut by the weight box.
class IFSSystem {
 public:
  static IFSSystem make(std::vector<AffineMap> maps, std::vector<WeightBound> weights);

  int size() const { return static_cast<int>(maps_.size()); }
  const std::vector<AffineMap>& maps() const { return maps_; }
  const std::vector<WeightBound>& weights() const { return weights_; }

 private:
  IFSSystem(std::vector<AffineMap> m, std::vector<WeightBound> w)
      : maps_(std::move(m)), weights_(std::move(w)) {}
  std::vector<AffineMap> maps_;
  std::vector<WeightBound> weights_;
};

// All vertices of the simplex-box intersection: each vertex pins every
// coordinate but one at a bound and solves the last by the sum constraint.
std::vector<std::vector<Rational>> admissible_vertices(const std::vector<WeightBound>& weights);

// Depth-k symbolic approximation of the invariant measure of one weight
// vector: each surviving word carries the product of its letters' weights on
// the image interval of its composed map. Zero-mass words are pruned.
struct CylinderMeasure {
  struct Cylinder {
    ClosedIval iv;
    Rational mass;
  };
  int depth = 0;
  std::vector<Cylinder> cylinders;
};

CylinderMeasure invariant_measure_approx(const IFSSystem& s, const std::vector<Rational>& p,
                                         int depth);

// Rigorous enclosure of the measure of a closed set at this depth:
// [mass of cylinders inside c, mass of cylinders meeting c].
ProbInterval eval_closed(const CylinderMeasure& m, const ClosedSet& c);

// The fixed point of map i when the weight vector is the i-th unit vector;
// such a vertex carries the point mass there and can be evaluated exactly.
std::optional<Rational> dirac_point(const IFSSystem& s, const std::vector<Rational>& p);

// Enclosure for one weight vector, exact for Dirac vertices.
ProbInterval eval_closed_vertex(const IFSSystem& s, const std::vector<Rational>& p,
                                const ClosedSet& c, int depth);

// Union of all depth-k cylinder intervals; decreasing in k and containing
// the attractor.
ClosedSet attractor_approx(const IFSSystem& s, int depth);

// Envelope of [1 - nu(c1), nu(c2)] over the admissible vertices, reported as
// an outer enclosure plus the per-vertex tables. Requires c1 and c2 to cover
// [0,1].
struct EnvelopeReport {
  ProbInterval outer;
  std::vector<std::vector<Rational>> vertices;
  // Per vertex: enclosures of nu(c1) and nu(c2).
  std::vector<std::pair<ProbInterval, ProbInterval>> per_vertex;
};

EnvelopeReport credal_envelope_closed(const IFSSystem& s, const ClosedSet& c1,
                                      const ClosedSet& c2, int depth);

}  // namespace credal

#endif  // CREDAL_IFS_HPP
