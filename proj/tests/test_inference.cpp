#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "credal/inference.hpp"

using namespace credal;

namespace {

const SpaceDescriptor line = SpaceDescriptor::cube(1);

OpenSet iv(long a, long b, long d) { return OpenSet::interval(rat(a, d), rat(b, d)); }

ProbInterval pi(long a1, long a2, long b1, long b2) {
  return make_prob_interval(rat(a1, a2), rat(b1, b2));
}

}  // namespace

TEST_CASE("positivity and classicality predicates") {
  auto leb = Valuation::lebesgue();
  CHECK(pos_check(leb, EventPair::make(iv(6, 10, 10), OpenSet::empty(line))));
  CHECK_FALSE(pos_check(leb, EventPair::bottom(line)));
  // The tail mass near 6e-15 needs a tolerance below it to be certified.
  CHECK(pos_check(Valuation::beta(2, 5, 1e-16),
                  EventPair::make(iv(999, 1000, 1000), OpenSet::empty(line))));
  CHECK_THROWS_AS(pos_check(Valuation::beta(2, 5),
                            EventPair::make(iv(999, 1000, 1000), OpenSet::empty(line))),
                  Indeterminate);
  CHECK(ce_check(leb, EventPair::make(iv(0, 1, 2), iv(1, 2, 2))));
  CHECK_FALSE(ce_check(leb, EventPair::make(iv(0, 4, 10), iv(6, 10, 10))));
}

TEST_CASE("fat cantor layers are never classical against their removals") {
  Rational r = rat(1, 2);
  auto fc = Valuation::fat_cantor(r, 8);
  for (int n = 1; n <= 4; ++n) {
    auto e = EventPair::make(fat_cantor_layer_open_set(r, n), fat_cantor_removed_open_set(r, n));
    CHECK_FALSE(ce_check(fc, e));
  }
}

TEST_CASE("conditional interval on the selection example") {
  auto leb = Valuation::lebesgue();
  auto h = EventPair::make(iv(80, 85, 100), os_union(iv(0, 70, 100), iv(95, 100, 100)));
  auto e = EventPair::make(iv(6, 10, 10), iv(1, 6, 10));
  auto c = cond_prob(leb, h, e);
  CHECK(c.lo.value() == rat(1, 10));
  CHECK(c.hi.value() == rat(7, 10));
  // A classical selection compatible with both partial events: H = (0.7,0.9),
  // E = (0,0.1) u (0.6,1) complement-wise; the point ratio 0.2/0.5 = 0.4.
  Rational classical = rat(2, 5);
  CHECK(c.contains_value(classical));
  CHECK_THROWS_AS(cond_prob(leb, h, EventPair::bottom(line)), PositivityViolation);
}

TEST_CASE("classical events give degenerate conditionals") {
  auto leb = Valuation::lebesgue();
  auto v = EventPair::make(iv(0, 1, 2), iv(1, 2, 2));
  auto c = cond_prob(leb, v, EventPair::whole(line));
  CHECK(c.is_degenerate());
  CHECK(c.lo.value() == rat(1, 2));
}

TEST_CASE("antitone refinement of conditionals") {
  auto leb = Valuation::lebesgue();
  auto o = EventPair::make(iv(6, 10, 10), iv(1, 6, 10));
  auto v_less = EventPair::make(iv(80, 85, 100), iv(0, 60, 100));
  auto v_more = EventPair::make(iv(80, 85, 100), os_union(iv(0, 70, 100), iv(95, 100, 100)));
  CHECK(event_leq(v_less, v_more));
  CHECK(interval_refines(cond_prob(leb, v_less, o), cond_prob(leb, v_more, o)));
}

TEST_CASE("joint conditional matches factor-wise conditional on products") {
  auto pw1 = Valuation::piecewise({rat(0), rat(1, 2), rat(1)}, {rat(1, 4), rat(3, 4)});
  auto pw2 = Valuation::piecewise({rat(0), rat(1, 4), rat(1)}, {rat(2, 3), rat(1, 3)});
  auto joint = Valuation::product({pw1, pw2});
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> num(0, 16);
  for (int i = 0; i < 40; ++i) {
    int a = num(rng) % 15, b = a + 1 + num(rng) % (16 - a);
    int c = num(rng) % 15, d = c + 1 + num(rng) % (16 - c);
    auto u = EventPair::make(OpenSet::interval(rat(a, 16), rat(b, 16)), OpenSet::empty(line));
    // Classical conditioning pair: outside is the complement of the inside,
    // so the denominator is exactly the inside's marginal mass.
    auto v_out = os_union(c > 0 ? OpenSet::interval(rat(0), rat(c, 16)) : OpenSet::empty(line),
                          d < 16 ? OpenSet::interval(rat(d, 16), rat(1)) : OpenSet::empty(line));
    auto v = EventPair::make(OpenSet::interval(rat(c, 16), rat(d, 16)), v_out);
    auto got = cond_prob_joint(joint, u, v);
    auto expect = cond_prob(pw1, u, EventPair::whole(line));
    // Independent factors: conditioning on the second factor is irrelevant.
    CHECK(got.lo.value() == expect.lo.value());
    CHECK(got.hi.value() == expect.hi.value());
  }
  auto empty_v = EventPair::bottom(line);
  CHECK_THROWS_AS(
      cond_prob_joint(joint, EventPair::whole(line), empty_v), PositivityViolation);
}

TEST_CASE("joint conditional trivial case") {
  auto joint = Valuation::lebesgue(2);
  auto u = EventPair::make(iv(0, 1, 2), OpenSet::empty(line));
  auto v = EventPair::make(iv(0, 1, 1), OpenSet::empty(line));
  auto c = cond_prob_joint(joint, u, v);
  CHECK(c.lo.value() == rat(1, 2));
  CHECK(c.hi.value() == 1);
}

TEST_CASE("interval bayes from assessments") {
  BayesAssessment medical{pi(1, 100, 5, 100), pi(85, 100, 95, 100), pi(1, 100, 10, 100)};
  auto out = bayes_from_assessment(medical);
  CHECK(out.lo.value() == rat(17, 215));
  CHECK(out.hi.value() == rat(95, 114));
  CHECK(to_double(out.lo.value()) == doctest::Approx(0.0791).epsilon(1e-2));
  CHECK(to_double(out.hi.value()) == doctest::Approx(0.8333).epsilon(1e-2));
  BayesAssessment classical{pi(3, 100, 3, 100), pi(90, 100, 90, 100), pi(55, 1000, 55, 1000)};
  auto c = bayes_from_assessment(classical);
  CHECK(c.is_degenerate());
  CHECK(to_double(c.lo.value()) == doctest::Approx(0.336).epsilon(2e-3));
}

TEST_CASE("model-level bayes agrees with the direct ratio on classical events") {
  auto leb = Valuation::lebesgue();
  auto h = EventPair::make(iv(0, 3, 10), iv(3, 10, 10));
  auto e = EventPair::make(iv(1, 5, 10), os_union(iv(0, 1, 10), iv(5, 10, 10)));
  auto out = bayes_update(leb, h, e);
  CHECK(out.is_degenerate());
  // sigma(H1 n E1) / sigma(E1) = 0.2 / 0.4
  CHECK(out.lo.value() == rat(1, 2));
  CHECK_THROWS_AS(bayes_update(leb, EventPair::whole(line), e), PositivityViolation);
}

TEST_CASE("random assessments match a grid search of the kernel") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(1, 19);
  for (int trial = 0; trial < 60; ++trial) {
    int a1 = num(rng), a2 = num(rng), b1 = num(rng), b2 = num(rng), c1 = num(rng),
        c2 = num(rng);
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    if (c1 > c2) std::swap(c1, c2);
    BayesAssessment as{pi(a1, 20, a2, 20), pi(b1, 20, b2, 20), pi(c1, 20, c2, 20)};
    auto out = bayes_from_assessment(as);
    Rational lo(2), hi(-1);
    for (int i = a1; i <= a2; ++i)
      for (int j = b1; j <= b2; ++j)
        for (int k = c1; k <= c2; ++k) {
          Rational v = bayes_kernel(UnitValue::exact(rat(i, 20)), UnitValue::exact(rat(j, 20)),
                                    UnitValue::exact(rat(k, 20)))
                           .value();
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
    CHECK(out.lo.value() == lo);
    CHECK(out.hi.value() == hi);
  }
}
