#ifndef CREDAL_OPEN_SET_HPP
#define CREDAL_OPEN_SET_HPP

#include <optional>
#include <vector>

#include "credal/rational.hpp"
#include "credal/space.hpp"

namespace credal {

// Open rational interval (lo, hi) with 0 <= lo < hi <= 1.
struct OpenIval {
  Rational lo;
  Rational hi;
  bool operator==(const OpenIval& o) const = default;
};

// Open rational box: one open interval per axis.
using Box = std::vector<OpenIval>;

// Closed rational interval [lo, hi], degenerate lo == hi allowed.
struct ClosedIval {
  Rational lo;
  Rational hi;
  bool operator==(const ClosedIval& o) const = default;
};

using ClosedBox = std::vector<ClosedIval>;

class ClosedSet;

// A finite union of open rational boxes in [0,1]^d, or a subset of a finite
// discrete space. Degenerate boxes are dropped at construction; the stored
// box list is normalized (1-D: disjoint and sorted; touching intervals are
// never merged since their union omits the shared endpoint).
class OpenSet {
 public:
  static OpenSet empty(const SpaceDescriptor& space);
  static OpenSet full(const SpaceDescriptor& space);  // (0,1)^d, or all points
  static OpenSet from_boxes(const SpaceDescriptor& space, std::vector<Box> boxes);
  static OpenSet interval(const Rational& lo, const Rational& hi);  // 1-D shorthand
  static OpenSet from_points(const SpaceDescriptor& space, std::vector<int> points);

  const SpaceDescriptor& space() const { return space_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<int>& points() const { return points_; }

  bool is_empty() const;
  bool contains(const std::vector<Rational>& pt) const;
  bool contains(int point) const;

  bool operator==(const OpenSet& o) const;  // semantic (point-set) equality

 private:
  OpenSet() = default;
  SpaceDescriptor space_{};
  std::vector<Box> boxes_;
  std::vector<int> points_;
};

// A closed subset: finite union of closed rational boxes (or a discrete
// subset). Produced by complementation and used directly by the IFS module.
class ClosedSet {
 public:
  static ClosedSet empty(const SpaceDescriptor& space);
  static ClosedSet full(const SpaceDescriptor& space);
  static ClosedSet from_boxes(const SpaceDescriptor& space, std::vector<ClosedBox> boxes);
  static ClosedSet point(const Rational& x);  // 1-D singleton {x}
  static ClosedSet interval(const Rational& lo, const Rational& hi);
  static ClosedSet from_points(const SpaceDescriptor& space, std::vector<int> points);

  const SpaceDescriptor& space() const { return space_; }
  const std::vector<ClosedBox>& boxes() const { return boxes_; }
  const std::vector<int>& points() const { return points_; }

  bool is_empty() const;
  bool contains(const std::vector<Rational>& pt) const;
  bool contains(int point) const;

  bool operator==(const ClosedSet& o) const;

 private:
  ClosedSet() = default;
  SpaceDescriptor space_{};
  std::vector<ClosedBox> boxes_;
  std::vector<int> points_;
};

// Lattice operations on canonical open sets.
OpenSet os_union(const OpenSet& a, const OpenSet& b);
OpenSet os_intersect(const OpenSet& a, const OpenSet& b);
// Product of cube open sets: all pairwise box products.
OpenSet os_product(const OpenSet& a, const OpenSet& b);

bool os_subset(const OpenSet& a, const OpenSet& b);
bool os_disjoint(const OpenSet& a, const OpenSet& b);

// Way-below via closure containment: closure(a) contained in b. Exact and
// decidable on rational boxes; sufficient for a << b in [0,1]^d.
bool os_way_below(const OpenSet& a, const OpenSet& b);

// Given a << b, constructs c with a << c << b by epsilon-enlargement of the
// closure of a.
OpenSet os_interpolate(const OpenSet& a, const OpenSet& b);

ClosedSet closed_complement(const OpenSet& o);
// Largest finite union of open rational boxes contained in the complement of
// c (drops isolated boundary faces, including cube-boundary faces).
OpenSet open_interior_of_complement(const ClosedSet& c);

// Closure of an open set as a closed-box union.
ClosedSet os_closure(const OpenSet& o);

ClosedSet cs_union(const ClosedSet& a, const ClosedSet& b);
// True iff a union b covers the whole space.
bool cs_covers(const ClosedSet& a, const ClosedSet& b);
bool cs_subset(const ClosedSet& a, const ClosedSet& b);

// Decomposition of a cube open set into pairwise disjoint full-dimensional
// open cells; their union can miss only a Lebesgue-null set of lower
// dimensional faces interior to the set. Used for exact measure evaluation.
std::vector<Box> disjoint_full_cells(const OpenSet& o);

}  // namespace credal

#endif  // CREDAL_OPEN_SET_HPP
