#include "credal/event_pair.hpp"

#include "credal/errors.hpp"

namespace credal {

EventPair EventPair::make(OpenSet inside, OpenSet outside) {
  require_same_space(inside.space(), outside.space(), "EventPair");
  if (!os_disjoint(inside, outside))
    throw OrderViolation("event components must be disjoint");
  return EventPair(std::move(inside), std::move(outside));
}

EventPair EventPair::bottom(const SpaceDescriptor& space) {
  return EventPair(OpenSet::empty(space), OpenSet::empty(space));
}

EventPair EventPair::whole(const SpaceDescriptor& space) {
  return EventPair(OpenSet::full(space), OpenSet::empty(space));
}

EventPair EventPair::null(const SpaceDescriptor& space) {
  return EventPair(OpenSet::empty(space), OpenSet::full(space));
}

ClosedEventPair ClosedEventPair::make(ClosedSet c1, ClosedSet c2) {
  require_same_space(c1.space(), c2.space(), "ClosedEventPair");
  if (!cs_covers(c1, c2))
    throw CoveringViolation("closed event components must cover the space");
  return ClosedEventPair(std::move(c1), std::move(c2));
}

EventPair event_intersect(const EventPair& a, const EventPair& b) {
  require_same_space(a.space(), b.space(), "event_intersect");
  return EventPair::make(os_intersect(a.o1(), b.o1()), os_union(a.o2(), b.o2()));
}

EventPair event_union(const EventPair& a, const EventPair& b) {
  require_same_space(a.space(), b.space(), "event_union");
  return EventPair::make(os_union(a.o1(), b.o1()), os_intersect(a.o2(), b.o2()));
}

EventPair event_product(const std::vector<EventPair>& events) {
  if (events.empty()) throw RangeViolation("event_product needs at least one factor");
  for (const auto& e : events)
    if (!e.space().is_cube()) throw SpaceMismatch("event_product requires cube factors");

  OpenSet inside = events[0].o1();
  for (std::size_t i = 1; i < events.size(); ++i) inside = os_product(inside, events[i].o1());

  int total_dim = 0;
  for (const auto& e : events) total_dim += e.space().extent;
  OpenSet outside = OpenSet::empty(SpaceDescriptor::cube(total_dim));
  for (std::size_t i = 0; i < events.size(); ++i) {
    OpenSet cyl = i == 0 ? events[0].o2() : OpenSet::full(events[0].space());
    for (std::size_t j = 1; j < events.size(); ++j)
      cyl = os_product(cyl, j == i ? events[j].o2() : OpenSet::full(events[j].space()));
    outside = os_union(outside, cyl);
  }
  return EventPair::make(std::move(inside), std::move(outside));
}

bool event_leq(const EventPair& a, const EventPair& b) {
  require_same_space(a.space(), b.space(), "event_leq");
  return os_subset(a.o1(), b.o1()) && os_subset(a.o2(), b.o2());
}

EventPair event_join(const EventPair& a, const EventPair& b) {
  require_same_space(a.space(), b.space(), "event_join");
  OpenSet in = os_union(a.o1(), b.o1());
  OpenSet out = os_union(a.o2(), b.o2());
  if (!os_disjoint(in, out))
    throw NoUpperBound("events have no common refinement: merged components intersect");
  return EventPair::make(std::move(in), std::move(out));
}

EventPair event_negate(const EventPair& h) { return EventPair::make(h.o2(), h.o1()); }

ClosedEventPair event_to_dual(const EventPair& e) {
  return ClosedEventPair::make(closed_complement(e.o2()), closed_complement(e.o1()));
}

EventPair event_from_dual(const ClosedEventPair& c) {
  return EventPair::make(open_interior_of_complement(c.c2()),
                         open_interior_of_complement(c.c1()));
}

ProbInterval event_probability(const Valuation& sigma, const EventPair& e) {
  require_same_space(sigma.space(), e.space(), "event_probability");
  UnitValue lo = eval_open(sigma, e.o1()).value;
  UnitValue hi = eval_open(sigma, e.o2()).value.complement();
  return make_prob_interval(lo, hi);
}

}  // namespace credal
