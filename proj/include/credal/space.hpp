#ifndef CREDAL_SPACE_HPP
#define CREDAL_SPACE_HPP

#include <string>

#include "credal/errors.hpp"

namespace credal {

// A concrete base space: the unit cube [0,1]^d or a finite discrete space.
struct SpaceDescriptor {
  enum class Kind { UnitCube, FiniteDiscrete };

  Kind kind = Kind::UnitCube;
  int extent = 1;  // dimension d >= 1, or point count n >= 1

  static SpaceDescriptor cube(int d) {
    if (d < 1) throw RangeViolation("cube dimension must be >= 1");
    return {Kind::UnitCube, d};
  }
  static SpaceDescriptor discrete(int n) {
    if (n < 1) throw RangeViolation("discrete size must be >= 1");
    return {Kind::FiniteDiscrete, n};
  }

  bool is_cube() const { return kind == Kind::UnitCube; }
  bool is_discrete() const { return kind == Kind::FiniteDiscrete; }

  bool operator==(const SpaceDescriptor& o) const = default;

  std::string describe() const {
    return is_cube() ? "[0,1]^" + std::to_string(extent)
                     : "discrete(" + std::to_string(extent) + ")";
  }
};

inline void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b,
                               const char* where) {
  if (!(a == b))
    throw SpaceMismatch(std::string(where) + ": " + a.describe() + " vs " + b.describe());
}

}  // namespace credal

#endif  // CREDAL_SPACE_HPP
