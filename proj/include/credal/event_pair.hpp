#ifndef CREDAL_EVENT_PAIR_HPP
#define CREDAL_EVENT_PAIR_HPP

#include <vector>

#include "credal/prob_interval.hpp"
#include "credal/valuation.hpp"

namespace credal {

// A partially specified event: a disjoint pair of open sets (inside, outside).
// Points in `inside` certainly belong to the event, points in `outside`
// certainly do not, and the rest is unresolved.
class EventPair {
 public:
  static EventPair make(OpenSet inside, OpenSet outside);
  // The bottom event (no information at all).
  static EventPair bottom(const SpaceDescriptor& space);
  // The certainly-true event (D, empty) and its negation (empty, D).
  static EventPair whole(const SpaceDescriptor& space);
  static EventPair null(const SpaceDescriptor& space);

  const OpenSet& o1() const { return o1_; }
  const OpenSet& o2() const { return o2_; }
  const SpaceDescriptor& space() const { return o1_.space(); }

  bool operator==(const EventPair& e) const { return o1_ == e.o1_ && o2_ == e.o2_; }

 private:
  EventPair(OpenSet a, OpenSet b) : o1_(std::move(a)), o2_(std::move(b)) {}
  OpenSet o1_;
  OpenSet o2_;
};

// The dual form: covering pair of closed sets (c1 contains the complement of
// the inside, c2 the complement of the outside).
class ClosedEventPair {
 public:
  static ClosedEventPair make(ClosedSet c1, ClosedSet c2);

  const ClosedSet& c1() const { return c1_; }
  const ClosedSet& c2() const { return c2_; }
  const SpaceDescriptor& space() const { return c1_.space(); }

  bool operator==(const ClosedEventPair& e) const { return c1_ == e.c1_ && c2_ == e.c2_; }

 private:
  ClosedEventPair(ClosedSet a, ClosedSet b) : c1_(std::move(a)), c2_(std::move(b)) {}
  ClosedSet c1_;
  ClosedSet c2_;
};

// Meet-like composition: (a1 n b1, a2 u b2).
EventPair event_intersect(const EventPair& a, const EventPair& b);
// Join-like composition: (a1 u b1, a2 n b2).
EventPair event_union(const EventPair& a, const EventPair& b);
// Product over cube spaces: the inside is the box product of the insides;
// the outside is the union of each outside cylinder-extended by full axes.
EventPair event_product(const std::vector<EventPair>& events);

// Information order: componentwise inclusion.
bool event_leq(const EventPair& a, const EventPair& b);

// Least upper bound in the information order, when the merged components
// stay disjoint.
EventPair event_join(const EventPair& a, const EventPair& b);

// Negation swaps the components.
EventPair event_negate(const EventPair& h);

// (complement of o2, complement of o1); the two closed sets cover the space.
ClosedEventPair event_to_dual(const EventPair& e);
// Inverse of the dual map on canonical representatives.
EventPair event_from_dual(const ClosedEventPair& c);

// The interval probability [sigma(o1), 1 - sigma(o2)].
ProbInterval event_probability(const Valuation& sigma, const EventPair& e);

}  // namespace credal

#endif  // CREDAL_EVENT_PAIR_HPP
