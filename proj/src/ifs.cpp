#include "credal/ifs.hpp"

#include <algorithm>

namespace credal {

namespace {

ClosedIval map_interval(const AffineMap& m, const ClosedIval& c) {
  Rational x = m.a * c.lo + m.b;
  Rational y = m.a * c.hi + m.b;
  return x <= y ? ClosedIval{x, y} : ClosedIval{y, x};
}

bool interval_inside(const ClosedIval& iv, const ClosedSet& c) {
  for (const auto& b : c.boxes())
    if (b[0].lo <= iv.lo && iv.hi <= b[0].hi) return true;
  return false;
}

bool interval_meets(const ClosedIval& iv, const ClosedSet& c) {
  for (const auto& b : c.boxes())
    if (iv.lo <= b[0].hi && b[0].lo <= iv.hi) return true;
  return false;
}

void require_line(const ClosedSet& c) {
  if (!c.space().is_cube() || c.space().extent != 1)
    throw SpaceMismatch("cylinder measures live on the unit interval");
}

}  // namespace

IFSSystem IFSSystem::make(std::vector<AffineMap> maps, std::vector<WeightBound> weights) {
  if (maps.size() < 2) throw RangeViolation("an iterated function system needs at least 2 maps");
  if (maps.size() != weights.size())
    throw RangeViolation("one weight interval per map required");
  for (const auto& m : maps) {
    if (abs(m.a) >= 1) throw RangeViolation("map is not a strict contraction");
    Rational lo = m.b, hi = m.a + m.b;
    if (lo > hi) std::swap(lo, hi);
    if (lo < 0 || hi > 1) throw RangeViolation("map does not send [0,1] into itself");
  }
  Rational lo_sum(0), hi_sum(0);
  for (const auto& w : weights) {
    if (w.lo < 0 || w.hi > 1 || w.lo > w.hi) throw RangeViolation("weight bound outside [0,1]");
    lo_sum += w.lo;
    hi_sum += w.hi;
  }
  if (lo_sum > 1 || hi_sum < 1)
    throw EmptyAdmissibleSet("weight box misses the probability simplex");
  return IFSSystem(std::move(maps), std::move(weights));
}

std::vector<std::vector<Rational>> admissible_vertices(const std::vector<WeightBound>& weights) {
  int n = static_cast<int>(weights.size());
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < n; ++free) {
    for (unsigned pattern = 0; pattern < (1u << (n - 1)); ++pattern) {
      std::vector<Rational> v(n);
      Rational rest(0);
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        if (i == free) continue;
        v[i] = (pattern >> bit & 1u) ? weights[i].hi : weights[i].lo;
        rest += v[i];
        ++bit;
      }
      Rational last = Rational(1) - rest;
      if (last < weights[free].lo || last > weights[free].hi) continue;
      v[free] = last;
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw EmptyAdmissibleSet("no simplex vertex satisfies the weight bounds");
  return out;
}

CylinderMeasure invariant_measure_approx(const IFSSystem& s, const std::vector<Rational>& p,
                                         int depth) {
  if (static_cast<int>(p.size()) != s.size())
    throw RangeViolation("weight vector length does not match the system");
  Rational total(0);
  for (const auto& x : p) {
    if (x < 0 || x > 1) throw RangeViolation("weight outside [0,1]");
    total += x;
  }
  if (total != 1) throw RangeViolation("weights do not sum to 1");

  CylinderMeasure m;
  m.depth = depth;
  m.cylinders = {{ClosedIval{Rational(0), Rational(1)}, Rational(1)}};
  for (int level = 0; level < depth; ++level) {
    std::vector<CylinderMeasure::Cylinder> next;
    next.reserve(m.cylinders.size() * s.size());
    for (const auto& c : m.cylinders)
      for (int i = 0; i < s.size(); ++i) {
        if (p[i] == 0) continue;
        next.push_back({map_interval(s.maps()[i], c.iv), c.mass * p[i]});
      }
    m.cylinders = std::move(next);
  }
  return m;
}

ProbInterval eval_closed(const CylinderMeasure& m, const ClosedSet& c) {
  require_line(c);
  Rational inside(0), meets(0);
  for (const auto& cyl : m.cylinders) {
    if (interval_inside(cyl.iv, c))
      inside += cyl.mass;
    else if (!interval_meets(cyl.iv, c))
      continue;
    else
      meets += cyl.mass;
  }
  return make_prob_interval(inside, inside + meets);
}

std::optional<Rational> dirac_point(const IFSSystem& s, const std::vector<Rational>& p) {
  int unit = -1;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i] == 1) unit = i;
    else if (p[i] != 0) return std::nullopt;
  }
  if (unit < 0) return std::nullopt;
  const AffineMap& f = s.maps()[unit];
  return f.b / (Rational(1) - f.a);
}

ProbInterval eval_closed_vertex(const IFSSystem& s, const std::vector<Rational>& p,
                                const ClosedSet& c, int depth) {
  if (auto x = dirac_point(s, p)) {
    require_line(c);
    Rational v = c.contains({*x}) ? Rational(1) : Rational(0);
    return make_prob_interval(v, v);
  }
  return eval_closed(invariant_measure_approx(s, p, depth), c);
}

ClosedSet attractor_approx(const IFSSystem& s, int depth) {
  std::vector<ClosedIval> level{{Rational(0), Rational(1)}};
  for (int k = 0; k < depth; ++k) {
    std::vector<ClosedIval> next;
    next.reserve(level.size() * s.size());
    for (const auto& iv : level)
      for (const auto& f : s.maps()) next.push_back(map_interval(f, iv));
    std::sort(next.begin(), next.end(),
              [](const ClosedIval& a, const ClosedIval& b) { return a.lo < b.lo; });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  std::vector<ClosedBox> boxes;
  boxes.reserve(level.size());
  for (const auto& iv : level) boxes.push_back({iv});
  return ClosedSet::from_boxes(SpaceDescriptor::cube(1), std::move(boxes));
}

EnvelopeReport credal_envelope_closed(const IFSSystem& s, const ClosedSet& c1,
                                      const ClosedSet& c2, int depth) {
  if (!cs_covers(c1, c2)) throw CoveringViolation("the two closed sets must cover [0,1]");
  EnvelopeReport rep;
  rep.vertices = admissible_vertices(s.weights());
  UnitValue max_c1 = UnitValue::zero(), max_c2 = UnitValue::zero();
  for (const auto& v : rep.vertices) {
    auto e1 = eval_closed_vertex(s, v, c1, depth);
    auto e2 = eval_closed_vertex(s, v, c2, depth);
    if (e1.hi.value() > max_c1.value()) max_c1 = e1.hi;
    if (e2.hi.value() > max_c2.value()) max_c2 = e2.hi;
    rep.per_vertex.emplace_back(e1, e2);
  }
  rep.outer = make_prob_interval(max_c1.complement(), max_c2);
  return rep;
}

}  // namespace credal
