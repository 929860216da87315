#ifndef CREDAL_MARKOV_HPP
#define CREDAL_MARKOV_HPP

#include "credal/ifs.hpp"

namespace credal {

// A square matrix of interval transition probabilities; every row's box must
// meet the probability simplex.
class IntervalTransitionMatrix {
 public:
  static IntervalTransitionMatrix make(std::vector<std::vector<WeightBound>> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<WeightBound>>& rows() const { return rows_; }

 private:
  explicit IntervalTransitionMatrix(std::vector<std::vector<WeightBound>> r)
      : rows_(std::move(r)) {}
  std::vector<std::vector<WeightBound>> rows_;
};

// Vertices of one row's polytope (simplex cut by the row's box). The
// admissible matrices form the product of these row polytopes, since the
// constraints never couple rows.
std::vector<std::vector<Rational>> row_vertices(const std::vector<WeightBound>& row);

// Unique stationary distribution of an exact stochastic matrix, solved as a
// rational linear system. Requires the positive-entry digraph to be strongly
// connected and aperiodic.
std::vector<Rational> stationary(const std::vector<std::vector<Rational>>& t);

struct StationaryBounds {
  enum class Provenance { Exact, VertexInner, Refined };
  std::vector<ProbInterval> per_state;
  Provenance provenance;
  std::vector<std::string> warnings;  // skipped degenerate vertex matrices
};

// Per-state min/max of the stationary distribution over all products of row
// vertices; an inner approximation of the true range. Vertex matrices that
// are reducible or periodic are skipped with a warning.
StationaryBounds stationary_bounds_vertices(const IntervalTransitionMatrix& itm);

// Exact bounds for two states: the stationary mass of state 1 is
// t21 / (1 - t11 + t21), increasing in both entries, so the extremes sit at
// the matching corners of the two entry intervals.
StationaryBounds two_state_exact(const IntervalTransitionMatrix& itm);

// Coordinate-wise hill climbing over row-vertex choices, one row swapped per
// step, seeded at the given vertex index in every row. Bounds cover every
// assignment visited, so they never shrink below the seed's.
StationaryBounds refine_bounds_local(const IntervalTransitionMatrix& itm, int start, int steps);

}  // namespace credal

#endif  // CREDAL_MARKOV_HPP
