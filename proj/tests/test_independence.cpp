#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "credal/independence.hpp"

using namespace credal;

namespace {

const SpaceDescriptor line = SpaceDescriptor::cube(1);

OpenSet iv(long a, long b, long d) { return OpenSet::interval(rat(a, d), rat(b, d)); }

// Classical event with inside (a/d, b/d) and outside its open complement.
EventPair classical(long a, long b, long d) {
  auto out = os_union(a > 0 ? OpenSet::interval(rat(0), rat(a, d)) : OpenSet::empty(line),
                      b < d ? OpenSet::interval(rat(b, d), rat(1)) : OpenSet::empty(line));
  return EventPair::make(iv(a, b, d), out);
}

Valuation random_piecewise(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  Rational w1 = rat(num(rng), 10);
  std::vector<Rational> breaks{rat(0), rat(num(rng), 10), rat(1)};
  if (breaks[1] == breaks[2]) breaks[1] = rat(1, 2);
  Rational one(1);
  return Valuation::piecewise(breaks, {w1, one - w1});
}

EventPair random_classical(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(0, 14);
  int a = num(rng);
  int b = a + 1 + num(rng) % (16 - a);
  return classical(a, b, 16);
}

ProbInterval pi(long lo, long hi) { return make_prob_interval(rat(lo, 100), rat(hi, 100)); }

}  // namespace

TEST_CASE("embedding onto axes of a larger cube") {
  auto o = iv(1, 3, 4);
  auto e0 = embed_on_axes(o, 3, {0});
  auto e2 = embed_on_axes(o, 3, {2});
  CHECK(e0.contains({rat(1, 2), rat(1, 100), rat(99, 100)}));
  CHECK_FALSE(e0.contains({rat(9, 10), rat(1, 2), rat(1, 2)}));
  CHECK(e2.contains({rat(1, 100), rat(99, 100), rat(1, 2)}));
  CHECK_FALSE(e2.contains({rat(1, 2), rat(1, 2), rat(9, 10)}));
  CHECK(embed_on_axes(OpenSet::empty(line), 3, {1}).is_empty());
  // A 2-D set spread over non-adjacent axes.
  auto sq = os_product(iv(0, 1, 2), iv(1, 2, 2));
  auto e = embed_on_axes(sq, 3, {2, 0});
  CHECK(e.contains({rat(3, 4), rat(1, 2), rat(1, 4)}));
  CHECK_FALSE(e.contains({rat(1, 4), rat(1, 2), rat(3, 4)}));
  CHECK_THROWS_AS(embed_on_axes(sq, 3, {0}), SpaceMismatch);
}

TEST_CASE("independence holds on product models") {
  std::mt19937 rng(11);
  auto joint = Valuation::product(
      {random_piecewise(rng), Valuation::lebesgue(), random_piecewise(rng)});
  for (int i = 0; i < 25; ++i) {
    CIQuery q{random_classical(rng), random_classical(rng), random_classical(rng), joint};
    CHECK(check_ci(q));
    CHECK(check_strong_ci(q));
    // Symmetry of the judgment itself.
    CIQuery s{q.v, q.u, q.w, joint, {1}, {0}, {2}};
    CHECK(check_ci(s));
  }
}

TEST_CASE("independence fails on a coupled mixture") {
  // Two strongly correlated regimes on the first two axes.
  auto low = Valuation::piecewise({rat(0), rat(1, 2), rat(1)}, {rat(3, 4), rat(1, 4)});
  auto high = Valuation::piecewise({rat(0), rat(1, 2), rat(1)}, {rat(1, 4), rat(3, 4)});
  auto joint = Valuation::mixture(
      {{rat(1, 2), Valuation::product({low, low, Valuation::lebesgue()})},
       {rat(1, 2), Valuation::product({high, high, Valuation::lebesgue()})}});
  CIQuery q{classical(0, 1, 2), classical(0, 1, 2), classical(0, 1, 1), joint};
  // sigma(U1 x V1) = (9 + 1)/32 = 5/16, but the marginals give 1/4.
  CHECK_FALSE(check_ci(q));
  CHECK_FALSE(check_strong_ci(q));
}

TEST_CASE("plain independence without the strong form") {
  // The regimes agree on (0,1/2) but disagree above it, so the inner events
  // factorize while the outer ones do not.
  auto a = Valuation::piecewise({rat(0), rat(1, 2), rat(3, 4), rat(1)},
                                {rat(1, 2), rat(3, 8), rat(1, 8)});
  auto b = Valuation::piecewise({rat(0), rat(1, 2), rat(3, 4), rat(1)},
                                {rat(1, 2), rat(1, 8), rat(3, 8)});
  auto joint = Valuation::mixture(
      {{rat(1, 2), Valuation::product({a, a, Valuation::lebesgue()})},
       {rat(1, 2), Valuation::product({b, b, Valuation::lebesgue()})}});
  auto u = EventPair::make(iv(0, 1, 2), iv(2, 3, 4));
  CIQuery q{u, u, classical(0, 1, 1), joint};
  CHECK(check_ci(q));
  CHECK_FALSE(check_strong_ci(q));
}

TEST_CASE("preconditions on the conditioning event") {
  auto joint = Valuation::lebesgue(3);
  auto u = classical(0, 1, 2), v = classical(1, 2, 2);
  CIQuery not_classical{u, v, EventPair::make(iv(0, 1, 2), iv(3, 4, 4)), joint};
  CHECK_THROWS_AS(check_ci(not_classical), CEViolation);
  CIQuery no_mass{u, v, EventPair::bottom(line), joint};
  CHECK_THROWS_AS(check_ci(no_mass), CEViolation);
  CIQuery bad_axes{u, v, classical(0, 1, 2), joint, {0}, {1}, {}};
  CHECK_THROWS_AS(check_ci(bad_axes), SpaceMismatch);
}

TEST_CASE("interval combiners on the reference figures") {
  auto cu = pi(60, 80), cv = pi(70, 90);
  auto f = combine_ci_frechet(cu, cv);
  CHECK(f.lo.value() == rat(42, 100));
  CHECK(f.hi.value() == rat(80, 100));
  CHECK(f.width() == rat(38, 100));
  auto s = combine_ci_strong(cu, cv);
  CHECK(s.lo.value() == rat(42, 100));
  CHECK(s.hi.value() == rat(72, 100));
  CHECK(s.width() == rat(30, 100));
  auto c = combine_ci_strong(pi(80, 80), pi(70, 70));
  CHECK(c.is_degenerate());
  CHECK(c.lo.value() == rat(56, 100));
  CHECK(c.width() == 0);
}

TEST_CASE("strong combiner always refines the bound-only combiner") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(0, 20);
  for (int i = 0; i < 200; ++i) {
    int a = num(rng), b = a + num(rng) % (21 - a);
    int c = num(rng), d = c + num(rng) % (21 - c);
    auto cu = make_prob_interval(rat(a, 20), rat(b, 20));
    auto cv = make_prob_interval(rat(c, 20), rat(d, 20));
    CHECK(interval_refines(combine_ci_frechet(cu, cv), combine_ci_strong(cu, cv)));
  }
}

TEST_CASE("graphoid rules on independent four-factor models") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto joint = Valuation::product({random_piecewise(rng), random_piecewise(rng),
                                     random_piecewise(rng), random_piecewise(rng)});
    auto u = random_classical(rng), v = random_classical(rng), w = random_classical(rng),
         z = random_classical(rng);
    for (auto rule : {GraphoidRule::Symmetry, GraphoidRule::WeakUnion,
                      GraphoidRule::Contraction, GraphoidRule::Intersection}) {
      auto rep = validate_graphoid(rule, joint, u, v, w, z);
      CHECK_FALSE(rep.counterexample());
      if (rep.preconditions_ok) {
        CHECK(rep.premises_hold);
        CHECK(rep.conclusion_holds);
      }
    }
  }
}

TEST_CASE("intersection rule on a strictly positive non-uniform model") {
  auto f1 = Valuation::piecewise({rat(0), rat(1, 3), rat(1)}, {rat(2, 5), rat(3, 5)});
  auto f2 = Valuation::piecewise({rat(0), rat(1, 2), rat(1)}, {rat(1, 7), rat(6, 7)});
  auto f3 = Valuation::piecewise({rat(0), rat(2, 3), rat(1)}, {rat(5, 9), rat(4, 9)});
  auto f4 = Valuation::piecewise({rat(0), rat(1, 4), rat(1)}, {rat(1, 11), rat(10, 11)});
  auto joint = Valuation::product({f1, f2, f3, f4});
  auto rep = validate_graphoid(GraphoidRule::Intersection, joint, classical(1, 9, 12),
                               classical(2, 10, 12), classical(0, 11, 12), classical(3, 12, 12));
  CHECK(rep.preconditions_ok);
  CHECK(rep.premises_hold);
  CHECK(rep.conclusion_holds);
  CHECK_FALSE(rep.counterexample());
}

TEST_CASE("graphoid reports flag broken preconditions") {
  auto joint = Valuation::lebesgue(4);
  // A non-classical conditioning event on the w block.
  auto partial = EventPair::make(iv(0, 1, 4), iv(3, 4, 4));
  auto rep = validate_graphoid(GraphoidRule::Symmetry, joint, classical(0, 1, 2),
                               classical(1, 2, 2), partial, classical(0, 1, 1));
  CHECK_FALSE(rep.preconditions_ok);
  CHECK_FALSE(rep.counterexample());
  CHECK_FALSE(rep.notes.empty());
}
