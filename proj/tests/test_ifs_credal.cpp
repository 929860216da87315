#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "credal/ifs.hpp"

using namespace credal;

namespace {

IFSSystem cantor() {
  return IFSSystem::make({{rat(1, 3), rat(0)}, {rat(1, 3), rat(2, 3)}},
                         {{rat(0), rat(1, 2)}, {rat(1, 2), rat(1)}});
}

Rational total_mass(const CylinderMeasure& m) {
  Rational t(0);
  for (const auto& c : m.cylinders) t += c.mass;
  return t;
}

}  // namespace

TEST_CASE("system construction validates maps and weights") {
  CHECK_THROWS_AS(IFSSystem::make({{rat(1, 3), rat(0)}}, {{rat(0), rat(1)}}), RangeViolation);
  CHECK_THROWS_AS(
      IFSSystem::make({{rat(3, 2), rat(0)}, {rat(1, 3), rat(0)}},
                      {{rat(0), rat(1)}, {rat(0), rat(1)}}),
      RangeViolation);
  CHECK_THROWS_AS(
      IFSSystem::make({{rat(1, 2), rat(3, 4)}, {rat(1, 3), rat(0)}},
                      {{rat(0), rat(1)}, {rat(0), rat(1)}}),
      RangeViolation);
  CHECK_THROWS_AS(
      IFSSystem::make({{rat(1, 3), rat(0)}, {rat(1, 3), rat(2, 3)}},
                      {{rat(0), rat(1, 4)}, {rat(0), rat(1, 4)}}),
      EmptyAdmissibleSet);
}

TEST_CASE("vertices of the admissible weight polytope") {
  auto v = admissible_vertices(cantor().weights());
  REQUIRE(v.size() == 2);
  CHECK(v[0] == std::vector<Rational>{rat(0), rat(1)});
  CHECK(v[1] == std::vector<Rational>{rat(1, 2), rat(1, 2)});
  // Three maps with a symmetric box: compare against the exhaustive
  // bound-pattern oracle.
  std::vector<WeightBound> box{{rat(1, 5), rat(1, 2)}, {rat(1, 5), rat(1, 2)},
                               {rat(1, 5), rat(1, 2)}};
  auto v3 = admissible_vertices(box);
  std::vector<std::vector<Rational>> oracle;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Rational opts[] = {rat(1, 5), rat(1, 2), rat(3, 10)};
        std::vector<Rational> cand{opts[i], opts[j], opts[k]};
        Rational sum = cand[0] + cand[1] + cand[2];
        int frees = (i == 2) + (j == 2) + (k == 2);
        if (sum == 1 && frees <= 1) oracle.push_back(cand);
      }
  std::sort(oracle.begin(), oracle.end());
  oracle.erase(std::unique(oracle.begin(), oracle.end()), oracle.end());
  CHECK(v3 == oracle);
  CHECK(std::count(v3.begin(), v3.end(), std::vector<Rational>{rat(1, 5), rat(3, 10), rat(1, 2)}) ==
        1);
  // Degenerate box: a single simplex point.
  std::vector<WeightBound> point{{rat(1, 4), rat(1, 4)}, {rat(3, 4), rat(3, 4)}};
  CHECK(admissible_vertices(point).size() == 1);
}

TEST_CASE("cylinder measures are uniform Bernoulli for equal weights") {
  auto m = invariant_measure_approx(cantor(), {rat(1, 2), rat(1, 2)}, 3);
  CHECK(m.cylinders.size() == 8);
  for (const auto& c : m.cylinders) {
    CHECK(c.mass == rat(1, 8));
    CHECK(c.iv.hi - c.iv.lo == rat(1, 27));
  }
  CHECK(total_mass(m) == 1);
}

TEST_CASE("unit weight vectors collapse to the rightmost cylinder") {
  auto m = invariant_measure_approx(cantor(), {rat(0), rat(1)}, 5);
  REQUIRE(m.cylinders.size() == 1);
  CHECK(m.cylinders[0].mass == 1);
  Rational len = rat(1, 243);
  CHECK(m.cylinders[0].iv.lo == Rational(1) - len);
  CHECK(m.cylinders[0].iv.hi == 1);
}

TEST_CASE("masses are consistent across depths") {
  std::mt19937 rng(7);
  auto s = cantor();
  std::vector<Rational> p{rat(1, 3), rat(2, 3)};
  auto coarse = invariant_measure_approx(s, p, 3);
  auto fine = invariant_measure_approx(s, p, 4);
  CHECK(total_mass(fine) == 1);
  for (const auto& parent : coarse.cylinders) {
    Rational child_sum(0);
    for (const auto& child : fine.cylinders)
      if (parent.iv.lo <= child.iv.lo && child.iv.hi <= parent.iv.hi) child_sum += child.mass;
    CHECK(child_sum == parent.mass);
  }
}

TEST_CASE("closed-set enclosures") {
  auto s = cantor();
  auto m = invariant_measure_approx(s, {rat(1, 2), rat(1, 2)}, 8);
  auto full = eval_closed(m, ClosedSet::full(SpaceDescriptor::cube(1)));
  CHECK(full.lo.value() == 1);
  CHECK(full.hi.value() == 1);
  auto right_point = eval_closed(m, ClosedSet::point(rat(1)));
  CHECK(right_point.lo.value() == 0);
  CHECK(right_point.hi.value() == rat(1, 256));
  // Left third: exactly half the mass at every depth; the two cylinders
  // flanking the removed middle touch it only at boundary points.
  auto left = eval_closed(m, ClosedSet::interval(rat(0), rat(1, 3)));
  CHECK(left.lo.value() == rat(1, 2));
  CHECK(left.hi.value() == rat(1, 2));
  // A set cutting cylinder interiors keeps a nontrivial enclosure around
  // the true value, which a self-similarity argument puts at 1/3.
  auto mid = eval_closed(m, ClosedSet::interval(rat(1, 4), rat(3, 4)));
  CHECK(mid.lo.value() < mid.hi.value());
  CHECK(mid.lo.value() <= rat(1, 3));
  CHECK(mid.hi.value() >= rat(1, 3));
  // Enclosures are nested as the depth grows.
  for (int d = 3; d < 7; ++d) {
    auto a = eval_closed(invariant_measure_approx(s, {rat(1, 2), rat(1, 2)}, d),
                         ClosedSet::interval(rat(1, 4), rat(3, 4)));
    auto b = eval_closed(invariant_measure_approx(s, {rat(1, 2), rat(1, 2)}, d + 1),
                         ClosedSet::interval(rat(1, 4), rat(3, 4)));
    CHECK(interval_refines(a, b));
  }
}

TEST_CASE("dirac vertices evaluate exactly") {
  auto s = cantor();
  auto x = dirac_point(s, {rat(0), rat(1)});
  REQUIRE(x.has_value());
  CHECK(*x == 1);
  CHECK_FALSE(dirac_point(s, {rat(1, 2), rat(1, 2)}).has_value());
  auto at_one = eval_closed_vertex(s, {rat(0), rat(1)}, ClosedSet::point(rat(1)), 4);
  CHECK(at_one.lo.value() == 1);
  CHECK(at_one.hi.value() == 1);
  auto away = eval_closed_vertex(s, {rat(0), rat(1)}, ClosedSet::interval(rat(0), rat(1, 2)), 4);
  CHECK(away.hi.value() == 0);
}

TEST_CASE("attractor approximation shrinks toward the middle-thirds set") {
  auto s = cantor();
  auto a1 = attractor_approx(s, 1);
  CHECK(a1 == cs_union(ClosedSet::interval(rat(0), rat(1, 3)),
                       ClosedSet::interval(rat(2, 3), rat(1))));
  for (int k = 1; k <= 5; ++k) {
    auto coarse = attractor_approx(s, k);
    auto fine = attractor_approx(s, k + 1);
    CHECK(cs_subset(fine, coarse));
    Rational len(0);
    for (const auto& b : fine.boxes()) len += b[0].hi - b[0].lo;
    Rational expect = rat(2, 3);
    for (int i = 0; i < k; ++i) expect *= rat(2, 3);
    CHECK(len == expect);
  }
}

TEST_CASE("credal envelope over the vertices") {
  auto s = cantor();
  auto full = ClosedSet::full(SpaceDescriptor::cube(1));
  auto bottom = credal_envelope_closed(s, full, full, 6);
  CHECK(bottom.outer.lo.value() == 0);
  CHECK(bottom.outer.hi.value() == 1);
  // The dual cover of {1}: the per-vertex values split into 0 and 1,
  // exhibiting a two-point image.
  auto c1 = ClosedSet::interval(rat(0), rat(1));
  auto c2 = ClosedSet::point(rat(1));
  auto rep = credal_envelope_closed(s, c2, c1, 10);
  REQUIRE(rep.per_vertex.size() == 2);
  CHECK(rep.per_vertex[0].first.lo.value() == 1);   // Dirac at 1
  CHECK(rep.per_vertex[1].first.hi.value() == rat(1, 1024));
  CHECK_THROWS_AS(credal_envelope_closed(s, c2, c2, 4), CoveringViolation);
  // Fewer vertices never raise the maximum.
  std::vector<WeightBound> narrow{{rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)}};
  auto sub = credal_envelope_closed(IFSSystem::make(s.maps(), narrow), c2, c1, 10);
  CHECK(sub.per_vertex.size() == 1);
  CHECK(sub.outer.lo.value() >= rep.outer.lo.value());
}
