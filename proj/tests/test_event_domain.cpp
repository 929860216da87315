#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "credal/event_pair.hpp"

using namespace credal;

namespace {

const SpaceDescriptor line = SpaceDescriptor::cube(1);

OpenSet iv(long a, long b, long d) { return OpenSet::interval(rat(a, d), rat(b, d)); }

std::mt19937 rng(99);

EventPair random_event() {
  // Disjoint by construction: inside left of a random split, outside right.
  std::uniform_int_distribution<int> num(1, 31);
  int s = num(rng);
  int a = rng() % s, b = a + 1 + rng() % (s - a);
  int c = s + rng() % (33 - s), d = c + 1 + rng() % (33 - c);
  return EventPair::make(OpenSet::interval(rat(a, 33), rat(b, 33)),
                         OpenSet::interval(rat(c, 33), rat(d, 33)));
}

}  // namespace

TEST_CASE("construction rejects overlapping components") {
  CHECK_THROWS_AS(EventPair::make(iv(0, 6, 10), iv(5, 10, 10)), OrderViolation);
  // Touching opens are fine.
  auto e = EventPair::make(iv(0, 5, 10), iv(5, 10, 10));
  CHECK(e.o1() == iv(0, 5, 10));
  CHECK_THROWS_AS(
      EventPair::make(iv(0, 1, 2), OpenSet::full(SpaceDescriptor::cube(2))), SpaceMismatch);
}

TEST_CASE("intersection and union formulas") {
  auto v = EventPair::make(iv(4, 6, 10), os_union(iv(0, 2, 10), iv(8, 10, 10)));
  auto o = EventPair::make(iv(3, 7, 10), os_union(iv(0, 1, 10), iv(9, 10, 10)));
  auto m = event_intersect(v, o);
  CHECK(m.o1() == iv(4, 6, 10));
  CHECK(m.o2() == os_union(iv(0, 2, 10), iv(8, 10, 10)));
  auto top = EventPair::whole(line);
  CHECK(event_intersect(v, top) == v);
  CHECK(event_union(v, EventPair::null(line)) == v);
  CHECK(event_union(v, v) == v);
  auto u = event_union(EventPair::make(iv(0, 2, 10), iv(5, 10, 10)),
                       EventPair::make(iv(3, 4, 10), iv(6, 10, 10)));
  CHECK(u.o1() == os_union(iv(0, 2, 10), iv(3, 4, 10)));
  CHECK(u.o2() == iv(6, 10, 10));
  for (int i = 0; i < 100; ++i) {
    auto a = random_event(), b = random_event();
    CHECK(os_disjoint(event_intersect(a, b).o1(), event_intersect(a, b).o2()));
    CHECK(os_disjoint(event_union(a, b).o1(), event_union(a, b).o2()));
  }
}

TEST_CASE("products cylinder-extend the outsides") {
  auto a = EventPair::make(iv(0, 5, 10), iv(7, 10, 10));
  auto b = EventPair::make(iv(2, 8, 10), OpenSet::empty(line));
  auto p = event_product({a, b});
  CHECK(p.space() == SpaceDescriptor::cube(2));
  CHECK(p.o1().contains({rat(1, 4), rat(1, 2)}));
  CHECK_FALSE(p.o1().contains({rat(3, 4), rat(1, 2)}));
  CHECK(p.o2().contains({rat(3, 4), rat(99, 100)}));
  CHECK(p.o2().contains({rat(3, 4), rat(1, 100)}));
  CHECK_FALSE(p.o2().contains({rat(1, 4), rat(1, 2)}));
  CHECK(os_disjoint(p.o1(), p.o2()));
  // Factor (D, empty) embeds the other event with a full axis.
  auto q = event_product({EventPair::whole(line), a});
  CHECK(q.o1().contains({rat(1, 2), rat(1, 4)}));
  CHECK(q.o2().contains({rat(1, 2), rat(8, 10)}));
  for (int i = 0; i < 50; ++i) {
    auto x = random_event(), y = random_event();
    auto z = event_product({x, y});
    CHECK(os_disjoint(z.o1(), z.o2()));
  }
}

TEST_CASE("information order and joins") {
  auto lo = EventPair::bottom(line);
  auto e = random_event();
  CHECK(event_leq(lo, e));
  CHECK(event_leq(e, e));
  auto a = EventPair::make(iv(0, 2, 10), iv(5, 7, 10));
  auto b = EventPair::make(iv(1, 3, 10), iv(6, 8, 10));
  auto j = event_join(a, b);
  CHECK(event_leq(a, j));
  CHECK(event_leq(b, j));
  // Join fails when one side's inside meets the other's outside.
  auto c = EventPair::make(iv(5, 7, 10), iv(0, 2, 10));
  CHECK_THROWS_AS(event_join(a, c), NoUpperBound);
  // Monotone composition.
  for (int i = 0; i < 50; ++i) {
    auto x = random_event();
    auto y = EventPair::bottom(line);
    CHECK(event_leq(event_intersect(y, x), event_intersect(x, x)));
  }
}

TEST_CASE("negation and duals") {
  auto h = EventPair::make(iv(0, 4, 10), iv(6, 10, 10));
  CHECK(event_negate(event_negate(h)) == h);
  CHECK(event_negate(EventPair::whole(line)) == EventPair::null(line));
  auto d = event_to_dual(h);
  CHECK(d.c1() == cs_union(ClosedSet::interval(rat(0), rat(6, 10)), ClosedSet::point(rat(1))));
  CHECK(d.c2() == cs_union(ClosedSet::point(rat(0)), ClosedSet::interval(rat(4, 10), rat(1))));
  CHECK(cs_covers(d.c1(), d.c2()));
  CHECK(event_from_dual(d) == h);
  auto bottom = event_to_dual(EventPair::bottom(line));
  CHECK(bottom.c1() == ClosedSet::full(line));
  CHECK(bottom.c2() == ClosedSet::full(line));
  for (int i = 0; i < 50; ++i) {
    auto e = random_event();
    CHECK(event_from_dual(event_to_dual(e)) == e);
  }
}

TEST_CASE("interval probability of events") {
  auto leb = Valuation::lebesgue();
  auto h = EventPair::make(iv(80, 85, 100), os_union(iv(0, 70, 100), iv(95, 100, 100)));
  auto p = event_probability(leb, h);
  CHECK(p.lo.value() == rat(1, 20));
  CHECK(p.hi.value() == rat(1, 4));
  auto b = event_probability(leb, EventPair::bottom(line));
  CHECK(b.lo.value() == 0);
  CHECK(b.hi.value() == 1);
  // Antitone: more information gives a tighter interval.
  for (int i = 0; i < 50; ++i) {
    auto e = random_event();
    auto less = EventPair::bottom(line);
    CHECK(interval_refines(event_probability(leb, less), event_probability(leb, e)));
    CHECK(event_probability(leb, e).lo.value() +
              eval_open(leb, e.o2()).value.value() <=
          1);
  }
}
