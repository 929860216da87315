#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "credal/markov.hpp"

using namespace credal;

namespace {

WeightBound wb(long a, long b, long d) { return {rat(a, d), rat(b, d)}; }
WeightBound point(long a, long d) { return {rat(a, d), rat(a, d)}; }

IntervalTransitionMatrix fixture2() {
  // t11 in [1/5, 2/5], t21 in [3/10, 1/2].
  return IntervalTransitionMatrix::make(
      {{wb(1, 2, 5), wb(3, 4, 5)}, {wb(3, 5, 10), wb(5, 7, 10)}});
}

// A random row box around a strictly positive stochastic row.
std::vector<WeightBound> random_row(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(1, 6);
  std::vector<long> centers(n);
  long total = 0;
  for (auto& c : centers) total += c = num(rng);
  std::vector<WeightBound> row;
  for (long c : centers) {
    Rational mid = rat(c, total);
    Rational slack = rat(1, 20);
    Rational lo = mid - slack, hi = mid + slack;
    row.push_back({lo < 0 ? Rational(0) : lo, hi > 1 ? Rational(1) : hi});
  }
  return row;
}

std::vector<Rational> random_admissible_row(std::mt19937& rng,
                                            const std::vector<WeightBound>& row) {
  int n = static_cast<int>(row.size());
  std::uniform_int_distribution<int> num(0, 64);
  while (true) {
    std::vector<Rational> v(n);
    Rational sum(0);
    for (int i = 0; i + 1 < n; ++i) {
      v[i] = row[i].lo + (row[i].hi - row[i].lo) * rat(num(rng), 64);
      sum += v[i];
    }
    v[n - 1] = Rational(1) - sum;
    if (v[n - 1] >= row[n - 1].lo && v[n - 1] <= row[n - 1].hi) return v;
  }
}

}  // namespace

TEST_CASE("construction checks row admissibility") {
  CHECK_THROWS_AS(
      IntervalTransitionMatrix::make({{wb(0, 1, 4), wb(0, 1, 4)}, {wb(0, 1, 1), wb(0, 1, 1)}}),
      EmptyRow);
  CHECK_THROWS_AS(
      IntervalTransitionMatrix::make({{wb(0, 6, 5), wb(0, 1, 1)}, {wb(0, 1, 1), wb(0, 1, 1)}}),
      RangeViolation);
}

TEST_CASE("row polytope vertices") {
  auto v = row_vertices({wb(1, 2, 5), wb(0, 1, 1)});
  REQUIRE(v.size() == 2);
  CHECK(v[0] == std::vector<Rational>{rat(1, 5), rat(4, 5)});
  CHECK(v[1] == std::vector<Rational>{rat(2, 5), rat(3, 5)});
  // Degenerate row: a single vertex.
  CHECK(row_vertices({point(1, 4), point(3, 4)}).size() == 1);
  // 3-state symmetric box against the exhaustive pattern oracle.
  auto v3 = row_vertices({wb(1, 2, 4), wb(1, 2, 4), wb(1, 2, 4)});
  CHECK(v3.size() == 3);
  for (const auto& row : v3) {
    Rational sum = row[0] + row[1] + row[2];
    CHECK(sum == 1);
  }
}

TEST_CASE("stationary distributions of exact chains") {
  auto sym = stationary({{rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)}});
  CHECK(sym == std::vector<Rational>{rat(1, 2), rat(1, 2)});
  auto pi = stationary({{rat(7, 10), rat(3, 10)}, {rat(4, 10), rat(6, 10)}});
  CHECK(pi[0] == rat(4, 7));
  CHECK(pi[1] == rat(3, 7));
  CHECK_THROWS_AS(stationary({{rat(1), rat(0)}, {rat(0), rat(1)}}), Reducible);
  CHECK_THROWS_AS(stationary({{rat(0), rat(1)}, {rat(1), rat(0)}}), Periodic);
  CHECK_THROWS_AS(stationary({{rat(1, 2), rat(1, 4)}, {rat(1, 2), rat(1, 2)}}), RangeViolation);
  // Residual is exactly zero.
  auto t3 = std::vector<std::vector<Rational>>{
      {rat(1, 2), rat(1, 4), rat(1, 4)},
      {rat(1, 3), rat(1, 3), rat(1, 3)},
      {rat(1, 5), rat(2, 5), rat(2, 5)}};
  auto p3 = stationary(t3);
  CHECK(p3[0] + p3[1] + p3[2] == 1);
  for (int j = 0; j < 3; ++j) {
    Rational acc(0);
    for (int i = 0; i < 3; ++i) acc += p3[i] * t3[i][j];
    CHECK(acc == p3[j]);
  }
}

TEST_CASE("two-state exact bounds") {
  auto b = two_state_exact(fixture2());
  CHECK(b.per_state[0].lo.value() == rat(3, 11));
  CHECK(b.per_state[0].hi.value() == rat(5, 11));
  CHECK(b.per_state[1].lo.value() == rat(6, 11));
  CHECK(b.per_state[1].hi.value() == rat(8, 11));
  CHECK(b.provenance == StationaryBounds::Provenance::Exact);
  // Point intervals give the point stationary distribution.
  auto p = two_state_exact(IntervalTransitionMatrix::make(
      {{point(7, 10), point(3, 10)}, {point(4, 10), point(6, 10)}}));
  CHECK(p.per_state[0].is_degenerate());
  CHECK(p.per_state[0].lo.value() == rat(4, 7));
  // Widening an entry interval never narrows the answer.
  auto wide = two_state_exact(IntervalTransitionMatrix::make(
      {{wb(1, 3, 5), wb(2, 4, 5)}, {wb(3, 5, 10), wb(5, 7, 10)}}));
  CHECK(interval_refines(wide.per_state[0], b.per_state[0]));
  CHECK_THROWS_AS(two_state_exact(IntervalTransitionMatrix::make(
                      {{wb(1, 1, 1), wb(0, 0, 1)}, {wb(0, 1, 2), wb(1, 2, 2)}})),
                  DegenerateChain);
}

TEST_CASE("vertex bounds agree with the exact solution on two states") {
  auto exact = two_state_exact(fixture2());
  auto vertex = stationary_bounds_vertices(fixture2());
  CHECK(vertex.provenance == StationaryBounds::Provenance::VertexInner);
  for (int k = 0; k < 2; ++k) {
    CHECK(vertex.per_state[k].lo.value() == exact.per_state[k].lo.value());
    CHECK(vertex.per_state[k].hi.value() == exact.per_state[k].hi.value());
  }
}

TEST_CASE("grid samples stay inside the two-state bounds") {
  auto b = two_state_exact(fixture2());
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      Rational t11 = rat(1, 5) + rat(1, 5) * rat(i, 40);
      Rational t21 = rat(3, 10) + rat(2, 10) * rat(j, 40);
      Rational x = t21 / (1 - t11 + t21);
      CHECK(b.per_state[0].contains_value(x));
    }
}

TEST_CASE("vertex bounds contain sampled stationary values on random chains") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::vector<WeightBound>> rows;
    for (int r = 0; r < 3; ++r) rows.push_back(random_row(rng, 3));
    auto itm = IntervalTransitionMatrix::make(rows);
    auto bounds = stationary_bounds_vertices(itm);
    for (int s = 0; s < 100; ++s) {
      std::vector<std::vector<Rational>> t;
      for (const auto& row : itm.rows()) t.push_back(random_admissible_row(rng, row));
      auto pi = stationary(t);
      for (int k = 0; k < 3; ++k) CHECK(bounds.per_state[k].contains_value(pi[k]));
    }
  }
}

TEST_CASE("degenerate vertices are skipped with warnings") {
  // One vertex pins an absorbing state; the rest remain usable.
  auto itm = IntervalTransitionMatrix::make(
      {{wb(1, 2, 2), wb(0, 1, 2)}, {wb(1, 1, 2), wb(1, 1, 2)}});
  auto b = stationary_bounds_vertices(itm);
  CHECK_FALSE(b.warnings.empty());
  CHECK(b.per_state[0].hi.value() <= rat(1, 2) + rat(1, 2));
}

TEST_CASE("local refinement") {
  auto itm = fixture2();
  auto full = stationary_bounds_vertices(itm);
  auto refined = refine_bounds_local(itm, 0, 8);
  CHECK(refined.provenance == StationaryBounds::Provenance::Refined);
  for (int k = 0; k < 2; ++k) {
    CHECK(refined.per_state[k].lo.value() == full.per_state[k].lo.value());
    CHECK(refined.per_state[k].hi.value() == full.per_state[k].hi.value());
  }
  // Zero steps returns the seed's point evaluation.
  auto seed_only = refine_bounds_local(itm, 0, 0);
  for (int k = 0; k < 2; ++k) CHECK(seed_only.per_state[k].is_degenerate());
  // Refined bounds sit inside the full vertex bounds on random 3-state cases.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<std::vector<WeightBound>> rows;
    for (int r = 0; r < 3; ++r) rows.push_back(random_row(rng, 3));
    auto m = IntervalTransitionMatrix::make(rows);
    auto f = stationary_bounds_vertices(m);
    auto r = refine_bounds_local(m, 0, 6);
    for (int k = 0; k < 3; ++k) CHECK(interval_refines(f.per_state[k], r.per_state[k]));
  }
}
