#include "credal/logic.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>

namespace credal {

namespace {

Scalar mass(const Valuation& sigma, const OpenSet& o) { return eval_open(sigma, o).value.scalar(); }

// Strict order beyond the error bands; exact values never throw.
bool strictly_less(const Scalar& a, const Scalar& b) {
  if (a.val + a.err < b.val - b.err) return true;
  if (a.val - a.err >= b.val + b.err) return false;
  throw Indeterminate("strict order hidden by the error band");
}

void check_threshold(const Rational& p) {
  if (p <= 0 || p >= 1)
    throw RangeViolation("judgment threshold outside (0,1): " + rational_to_string(p));
}

template <class T>
const T& expect(const Judgment& j, const char* rule) {
  const T* t = std::get_if<T>(&j);
  if (!t) throw SchemaMismatch(std::string("premise shape does not fit rule ") + rule);
  return *t;
}

void expect_arity(const RuleInstance& r, std::size_t n, const char* rule) {
  if (r.premises.size() != n)
    throw SchemaMismatch(std::string("wrong premise count for rule ") + rule);
}

// Conditioning denominator 1 - sigma(O2) and the two numerators, cross
// multiplied so no division is needed.
bool cond_above_holds(const Valuation& sigma, const CondAbove& c) {
  check_threshold(c.p);
  if (!pos_check(sigma, c.o)) throw PositivityViolation("conditioning event has no mass");
  Scalar den = Scalar(Rational(1)) - mass(sigma, c.o.o2());
  Scalar num = mass(sigma, os_intersect(c.v.o1(), c.o.o1()));
  return strictly_less(Scalar(c.p) * den, num);
}

bool cond_below_holds(const Valuation& sigma, const CondBelow& c) {
  check_threshold(c.q);
  if (!pos_check(sigma, c.o)) throw PositivityViolation("conditioning event has no mass");
  Scalar den = Scalar(Rational(1)) - mass(sigma, c.o.o2());
  Scalar num = mass(sigma, os_intersect(c.v.o2(), c.o.o1()));
  // 1 - num/den < q  <=>  (1-q) den < num.
  return strictly_less(Scalar(Rational(1) - c.q) * den, num);
}

// Cylinder embeddings of a three-block family onto the combined cube.
struct TriBlock {
  EventPair u_cyl, v_cyl, w_cyl, uv_cyl;
};

TriBlock embed_tri(const EventPair& u, const EventPair& v, const EventPair& w) {
  auto wu = EventPair::whole(u.space());
  auto wv = EventPair::whole(v.space());
  auto ww = EventPair::whole(w.space());
  return {event_product({u, wv, ww}), event_product({wu, v, ww}), event_product({wu, wv, w}),
          event_product({u, v, ww})};
}

// Exact rational conditional endpoints; refuses models with error bands.
std::pair<Rational, Rational> cond_endpoints_exact(const Valuation& sigma, const EventPair& v,
                                                   const EventPair& o) {
  Scalar den = Scalar(Rational(1)) - mass(sigma, o.o2());
  Scalar lo = mass(sigma, os_intersect(v.o1(), o.o1()));
  Scalar hi = mass(sigma, os_intersect(v.o2(), o.o1()));
  if (!den.is_exact() || !lo.is_exact() || !hi.is_exact())
    throw Indeterminate("conditional endpoints carry an error band");
  if (den.val <= 0) throw DegenerateDenominator("conditioning denominator is zero");
  return {lo.val / den.val, Rational(1) - hi.val / den.val};
}

// Posterior map on exact rationals; nullopt when the denominator vanishes.
std::optional<Rational> posterior_point(const Rational& x, const Rational& y, const Rational& z) {
  Rational num = x * y;
  Rational den = num + z * (Rational(1) - x);
  if (den == 0) return std::nullopt;
  return num / den;
}

Rational pow2(int d) {
  Rational r(1);
  for (int i = 0; i < d; ++i) r *= 2;
  return r;
}

// Largest k/2^d strictly below x with k >= 1, and the smallest strictly
// above with k <= 2^d - 1.
std::optional<Rational> dyadic_below(const Rational& x, int d) {
  Rational scale = pow2(d);
  Rational t = x * scale;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  if (t.get_den() == 1) k -= 1;
  if (k < 1) return std::nullopt;
  return Rational(k) / scale;
}

std::optional<Rational> dyadic_above(const Rational& x, int d) {
  Rational scale = pow2(d);
  Rational t = x * scale;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  k += 1;
  if (Rational(k) >= scale) return std::nullopt;
  return Rational(k) / scale;
}

}  // namespace

bool holds(const Valuation& sigma, const Judgment& j) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MassAbove>) {
          check_threshold(x.p);
          return strictly_less(Scalar(x.p), mass(sigma, x.v));
        } else if constexpr (std::is_same_v<T, CondAbove>) {
          return cond_above_holds(sigma, x);
        } else if constexpr (std::is_same_v<T, CondBelow>) {
          return cond_below_holds(sigma, x);
        } else if constexpr (std::is_same_v<T, PostAbove>) {
          check_threshold(x.p);
          auto post = bayes_update(sigma, x.h, x.e);
          return strictly_less(Scalar(x.p), post.lo.scalar());
        } else if constexpr (std::is_same_v<T, PostBelow>) {
          check_threshold(x.q);
          auto post = bayes_update(sigma, x.h, x.e);
          return strictly_less(post.hi.scalar(), Scalar(x.q));
        } else if constexpr (std::is_same_v<T, Positive>) {
          return pos_check(sigma, x.o);
        } else if constexpr (std::is_same_v<T, Classical>) {
          return ce_check(sigma, x.o);
        } else {
          static_assert(std::is_same_v<T, Independent>);
          CIQuery q{x.u, x.v, x.w, sigma};
          return x.strong ? check_strong_ci(q) : check_ci(q);
        }
      },
      j);
}

bool holds(const BayesAssessment& a, const Judgment& j) {
  auto post = bayes_from_assessment(a);
  if (const auto* lo = std::get_if<PostAbove>(&j)) {
    check_threshold(lo->p);
    return strictly_less(Scalar(lo->p), post.lo.scalar());
  }
  if (const auto* hi = std::get_if<PostBelow>(&j)) {
    check_threshold(hi->q);
    return strictly_less(post.hi.scalar(), Scalar(hi->q));
  }
  throw SchemaMismatch("only posterior judgments are defined against assessments");
}

Judgment apply_forward(const RuleInstance& rule) {
  switch (rule.id) {
    case RuleId::L1:
    case RuleId::U1:
    case RuleId::L1BrokenSelfTest: {
      const char* name = rule.id == RuleId::U1 ? "U1" : "L1";
      expect_arity(rule, 2, name);
      if (rule.events.size() != 2)
        throw SchemaMismatch(std::string(name) + " needs the event arguments {v, o}");
      const EventPair& v = rule.events[0];
      const EventPair& o = rule.events[1];
      const auto& g1 = expect<MassAbove>(rule.premises[0], name);
      const auto& g2 = expect<MassAbove>(rule.premises[1], name);
      const OpenSet& inner = rule.id == RuleId::U1 ? v.o2() : v.o1();
      if (!(g1.v == os_intersect(inner, o.o1())) || !(g2.v == o.o2()))
        throw SchemaMismatch(std::string(name) + " premises name the wrong open sets");
      if (g2.p >= 1) throw DegenerateDenominator("threshold denominator vanishes");
      Rational ratio = g1.p / (Rational(1) - g2.p);
      if (rule.id == RuleId::U1) return CondBelow{v, o, Rational(1) - ratio};
      if (rule.id == RuleId::L1BrokenSelfTest) {
        Rational doubled = Rational(2) * ratio;
        return CondAbove{v, o, doubled < rat(255, 256) ? doubled : rat(255, 256)};
      }
      return CondAbove{v, o, ratio};
    }
    case RuleId::B1: {
      expect_arity(rule, 3, "B1");
      const auto& c1 = expect<CondAbove>(rule.premises[0], "B1");
      const auto& c2 = expect<CondAbove>(rule.premises[1], "B1");
      const auto& c3 = expect<CondBelow>(rule.premises[2], "B1");
      if (!(c1.o == EventPair::whole(c1.v.space())) || !(c2.o == c1.v) ||
          !(c3.o == event_negate(c1.v)) || !(c3.v == c2.v))
        throw SchemaMismatch("B1 premises must condition e on h, ~h and h on the whole space");
      auto p = posterior_point(c1.p, c2.p, c3.q);
      if (!p) throw DegenerateDenominator("posterior denominator vanishes");
      return PostAbove{c1.v, c2.v, *p};
    }
    case RuleId::B3: {
      expect_arity(rule, 3, "B3");
      const auto& c1 = expect<CondBelow>(rule.premises[0], "B3");
      const auto& c2 = expect<CondBelow>(rule.premises[1], "B3");
      const auto& c3 = expect<CondAbove>(rule.premises[2], "B3");
      if (!(c1.o == EventPair::whole(c1.v.space())) || !(c2.o == c1.v) ||
          !(c3.o == event_negate(c1.v)) || !(c3.v == c2.v))
        throw SchemaMismatch("B3 premises must condition e on h, ~h and h on the whole space");
      auto q = posterior_point(c1.q, c2.q, c3.p);
      if (!q) throw DegenerateDenominator("posterior denominator vanishes");
      return PostBelow{c1.v, c2.v, *q};
    }
    case RuleId::CI5:
    case RuleId::CI7:
    case RuleId::SI9: {
      const char* name = rule.id == RuleId::CI5 ? "CI5" : rule.id == RuleId::CI7 ? "CI7" : "SI9";
      expect_arity(rule, 5, name);
      const auto& ind = expect<Independent>(rule.premises[2], name);
      if ((rule.id == RuleId::SI9) != ind.strong)
        throw SchemaMismatch(std::string(name) + " needs the matching independence strength");
      auto tri = embed_tri(ind.u, ind.v, ind.w);
      if (rule.id == RuleId::CI5) {
        const auto& cu = expect<CondAbove>(rule.premises[3], name);
        const auto& cv = expect<CondAbove>(rule.premises[4], name);
        if (!(cu.o == cv.o)) throw SchemaMismatch("CI5 premises condition on different events");
        return CondAbove{tri.uv_cyl, tri.w_cyl, cu.p * cv.p};
      }
      const auto& cu = expect<CondBelow>(rule.premises[3], name);
      const auto& cv = expect<CondBelow>(rule.premises[4], name);
      if (!(cu.o == cv.o))
        throw SchemaMismatch(std::string(name) + " premises condition on different events");
      Rational q = rule.id == RuleId::SI9 ? cu.q * cv.q : std::min(cu.q, cv.q);
      return CondBelow{tri.uv_cyl, tri.w_cyl, q};
    }
    default:
      throw SchemaMismatch("not a forward rule");
  }
}

namespace {

// The universal part of L2/U2: every grid threshold satisfies the
// disjunction of the two derived mass judgments.
void grid_disjunction(BackwardReport& rep, const Valuation& sigma, const OpenSet& first,
                      const OpenSet& second, const Rational& base, bool lower_form,
                      int grid_depth) {
  Rational scale = pow2(grid_depth);
  rep.verified = true;
  for (mpz_class k = 1; Rational(k) < scale; ++k) {
    Rational p = Rational(k) / scale;
    ++rep.checked;
    // Lower form pairs G(O2;p) with G(V1 n O1; base (1-p)); the upper form
    // uses (1-base)(1-p) on V2 n O1.
    Rational second_p = (lower_form ? base : Rational(1) - base) * (Rational(1) - p);
    bool any = false;
    try {
      any = holds(sigma, MassAbove{first, p});
      if (!any && second_p > 0 && second_p < 1)
        any = holds(sigma, MassAbove{second, second_p});
    } catch (const Indeterminate&) {
      ++rep.indeterminate;
      continue;
    }
    if (!any) {
      rep.verified = false;
      rep.notes.push_back("grid point " + rational_to_string(p) +
                          " certainly fails both disjuncts");
    }
  }
}

void require_backward_premise(BackwardReport& rep, const Valuation& sigma, const Judgment& j) {
  try {
    rep.premise_holds = holds(sigma, j);
  } catch (const Indeterminate&) {
    ++rep.indeterminate;
    rep.inconclusive = true;
    rep.notes.push_back("premise truth hidden by the error band");
  }
}

bool witness_judgment(BackwardReport& rep, const Valuation& sigma, const Judgment& j) {
  try {
    return holds(sigma, j);
  } catch (const Indeterminate&) {
    ++rep.indeterminate;
    return false;
  }
}

}  // namespace

BackwardReport check_backward(const RuleInstance& rule, const Valuation& sigma, int grid_depth) {
  BackwardReport rep;
  switch (rule.id) {
    case RuleId::L2: {
      expect_arity(rule, 1, "L2");
      const auto& c = expect<CondAbove>(rule.premises[0], "L2");
      require_backward_premise(rep, sigma, rule.premises[0]);
      if (!rep.premise_holds) return rep;
      grid_disjunction(rep, sigma, c.o.o2(), os_intersect(c.v.o1(), c.o.o1()), c.p, true,
                       grid_depth);
      return rep;
    }
    case RuleId::U2: {
      expect_arity(rule, 1, "U2");
      const auto& c = expect<CondBelow>(rule.premises[0], "U2");
      require_backward_premise(rep, sigma, rule.premises[0]);
      if (!rep.premise_holds) return rep;
      grid_disjunction(rep, sigma, c.o.o2(), os_intersect(c.v.o2(), c.o.o1()), c.q, false,
                       grid_depth);
      return rep;
    }
    case RuleId::B2:
    case RuleId::B4: {
      const char* name = rule.id == RuleId::B2 ? "B2" : "B4";
      expect_arity(rule, 1, name);
      EventPair h = EventPair::bottom(sigma.space());
      EventPair e = h;
      Rational bound;
      if (rule.id == RuleId::B2) {
        const auto& c = expect<PostAbove>(rule.premises[0], name);
        h = c.h, e = c.e, bound = c.p;
      } else {
        const auto& c = expect<PostBelow>(rule.premises[0], name);
        h = c.h, e = c.e, bound = c.q;
      }
      require_backward_premise(rep, sigma, rule.premises[0]);
      if (!rep.premise_holds) return rep;
      EventPair nh = event_negate(h);
      EventPair whole = EventPair::whole(h.space());
      auto prior = cond_endpoints_exact(sigma, h, whole);
      auto like = cond_endpoints_exact(sigma, e, h);
      auto alt = cond_endpoints_exact(sigma, e, nh);
      // The posterior map rises in its first two arguments and falls in the
      // third, so the best dyadic witness triple snaps each model value to
      // the grid in the sound direction.
      bool want_lower = rule.id == RuleId::B2;
      auto w1 = want_lower ? dyadic_below(prior.first, grid_depth)
                           : dyadic_above(prior.second, grid_depth);
      auto w2 = want_lower ? dyadic_below(like.first, grid_depth)
                           : dyadic_above(like.second, grid_depth);
      auto w3 = want_lower ? dyadic_above(alt.second, grid_depth)
                           : dyadic_below(alt.first, grid_depth);
      ++rep.checked;
      if (!w1 || !w2 || !w3) {
        rep.inconclusive = true;
        rep.notes.push_back("no grid value separates a model endpoint from {0,1}");
        return rep;
      }
      auto val = posterior_point(*w1, *w2, *w3);
      bool threshold_ok = val && (want_lower ? bound < *val : *val < bound);
      bool t1, t2, t3;
      if (want_lower) {
        t1 = witness_judgment(rep, sigma, CondAbove{h, whole, *w1});
        t2 = witness_judgment(rep, sigma, CondAbove{e, h, *w2});
        t3 = witness_judgment(rep, sigma, CondBelow{e, nh, *w3});
      } else {
        t1 = witness_judgment(rep, sigma, CondBelow{h, whole, *w1});
        t2 = witness_judgment(rep, sigma, CondBelow{e, h, *w2});
        t3 = witness_judgment(rep, sigma, CondAbove{e, nh, *w3});
      }
      if (threshold_ok && t1 && t2 && t3) {
        rep.verified = true;
        rep.witnesses = {*w1, *w2, *w3};
      } else {
        rep.inconclusive = true;
        rep.notes.push_back("witness search exhausted at this grid depth");
      }
      return rep;
    }
    case RuleId::CI6:
    case RuleId::CI8:
    case RuleId::SI10: {
      const char* name =
          rule.id == RuleId::CI6 ? "CI6" : rule.id == RuleId::CI8 ? "CI8" : "SI10";
      expect_arity(rule, 4, name);
      const auto& ind = expect<Independent>(rule.premises[2], name);
      if ((rule.id == RuleId::SI10) != ind.strong)
        throw SchemaMismatch(std::string(name) + " needs the matching independence strength");
      auto tri = embed_tri(ind.u, ind.v, ind.w);
      require_backward_premise(rep, sigma, rule.premises[3]);
      if (!rep.premise_holds) return rep;
      auto ue = cond_endpoints_exact(sigma, tri.u_cyl, tri.w_cyl);
      auto ve = cond_endpoints_exact(sigma, tri.v_cyl, tri.w_cyl);
      ++rep.checked;
      if (rule.id == RuleId::CI6) {
        const auto& c = expect<CondAbove>(rule.premises[3], name);
        auto p1 = dyadic_below(ue.first, grid_depth);
        auto p2 = dyadic_below(ve.first, grid_depth);
        if (p1 && p2 && c.p < *p1 * *p2 &&
            witness_judgment(rep, sigma, CondAbove{tri.u_cyl, tri.w_cyl, *p1}) &&
            witness_judgment(rep, sigma, CondAbove{tri.v_cyl, tri.w_cyl, *p2})) {
          rep.verified = true;
          rep.witnesses = {*p1, *p2};
        }
      } else {
        const auto& c = expect<CondBelow>(rule.premises[3], name);
        auto q1 = dyadic_above(ue.second, grid_depth);
        auto q2 = dyadic_above(ve.second, grid_depth);
        bool sep = q1 && q2 &&
                   (rule.id == RuleId::CI8 ? std::min(*q1, *q2) < c.q : *q1 * *q2 < c.q);
        if (sep && witness_judgment(rep, sigma, CondBelow{tri.u_cyl, tri.w_cyl, *q1}) &&
            witness_judgment(rep, sigma, CondBelow{tri.v_cyl, tri.w_cyl, *q2})) {
          rep.verified = true;
          rep.witnesses = {*q1, *q2};
        }
      }
      if (!rep.verified) {
        rep.inconclusive = true;
        rep.notes.push_back("witness search exhausted at this grid depth");
      }
      return rep;
    }
    default:
      throw SchemaMismatch("not a backward rule");
  }
}

namespace {

// Random instance plumbing shared by the sweep families.
struct Sampler {
  std::mt19937 rng;
  explicit Sampler(unsigned seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  // A fraction of x strictly between 0 and x.
  Rational below(const Rational& x) { return x * rat(pick(1, 15), 16); }
  // A value strictly between x and 1.
  Rational above(const Rational& x) { return x + (Rational(1) - x) * rat(pick(1, 15), 16); }

  // Four strictly increasing interior cuts k/24.
  std::array<Rational, 4> cuts() {
    std::array<int, 4> k{};
    while (true) {
      for (auto& v : k) v = pick(1, 23);
      std::sort(k.begin(), k.end());
      if (k[0] < k[1] && k[1] < k[2] && k[2] < k[3]) break;
    }
    return {rat(k[0], 24), rat(k[1], 24), rat(k[2], 24), rat(k[3], 24)};
  }

  // v = ((c1,c2), (c3,c4)) and o = ((c1,c4), one flank): both numerators of
  // the conditional of v given o are nonempty.
  std::pair<EventPair, EventPair> cond_pair() {
    auto c = cuts();
    auto v = EventPair::make(OpenSet::interval(c[0], c[1]), OpenSet::interval(c[2], c[3]));
    OpenSet flank = pick(0, 1) == 0 ? OpenSet::interval(Rational(0), c[0])
                                    : OpenSet::interval(c[3], Rational(1));
    auto o = EventPair::make(OpenSet::interval(c[0], c[3]), flank);
    return {v, o};
  }

  // h = ((c1,c2), (c3,c4)) and e built so that all four intersections
  // E1/E2 with H1/H2 have nonempty interiors.
  std::pair<EventPair, EventPair> bayes_pair() {
    auto c = cuts();
    Rational a = (c[0] + c[1]) / 2, b = (c[2] + c[3]) / 2;
    auto h = EventPair::make(OpenSet::interval(c[0], c[1]), OpenSet::interval(c[2], c[3]));
    auto e1 = OpenSet::interval(a, b);
    auto e2 = os_union(OpenSet::interval((c[0] + a) / 2, a), OpenSet::interval(b, (b + c[3]) / 2));
    return {h, EventPair::make(e1, e2)};
  }

  EventPair two_sided_event() {
    auto c = cuts();
    return EventPair::make(OpenSet::interval(c[0], c[1]), OpenSet::interval(c[2], c[3]));
  }

  EventPair classical_event() {
    int a = pick(0, 22);
    int b = pick(a + 1, 23);
    auto out = os_union(a > 0 ? OpenSet::interval(Rational(0), rat(a, 24))
                              : OpenSet::empty(SpaceDescriptor::cube(1)),
                        OpenSet::interval(rat(b, 24), Rational(1)));
    return EventPair::make(OpenSet::interval(rat(a, 24), rat(b, 24)), out);
  }
};

bool is_ci_rule(RuleId id) {
  switch (id) {
    case RuleId::CI5:
    case RuleId::CI6:
    case RuleId::CI7:
    case RuleId::CI8:
    case RuleId::SI9:
    case RuleId::SI10:
      return true;
    default:
      return false;
  }
}

const char* rule_name(RuleId id) {
  switch (id) {
    case RuleId::L1: return "L1";
    case RuleId::L2: return "L2";
    case RuleId::U1: return "U1";
    case RuleId::U2: return "U2";
    case RuleId::B1: return "B1";
    case RuleId::B2: return "B2";
    case RuleId::B3: return "B3";
    case RuleId::B4: return "B4";
    case RuleId::CI5: return "CI5";
    case RuleId::CI6: return "CI6";
    case RuleId::CI7: return "CI7";
    case RuleId::CI8: return "CI8";
    case RuleId::SI9: return "SI9";
    case RuleId::SI10: return "SI10";
    case RuleId::L1BrokenSelfTest: return "L1BrokenSelfTest";
  }
  return "?";
}

}  // namespace

SweepReport soundness_sweep(const Valuation& sigma, const std::vector<RuleId>& rules,
                            int n_instances, unsigned seed) {
  SweepReport rep;
  Sampler gen(seed);
  const int dim = sigma.space().extent;

  auto check_conclusion = [&](RuleId id, const Judgment& conclusion) {
    try {
      if (!holds(sigma, conclusion))
        rep.violations.push_back(std::string(rule_name(id)) +
                                 ": conclusion certainly false with true premises");
    } catch (const Indeterminate&) {
      ++rep.indeterminate;
    }
  };

  for (RuleId id : rules) {
    if (is_ci_rule(id) && dim < 3)
      throw SpaceMismatch("conditional independence sweeps need a product model of dim >= 3");
    if (!is_ci_rule(id) && dim != 1)
      throw SpaceMismatch("conditional/posterior sweeps run on one-dimensional models");

    for (int i = 0; i < n_instances; ++i) {
      ++rep.instances;
      try {
        switch (id) {
          case RuleId::L1:
          case RuleId::U1:
          case RuleId::L1BrokenSelfTest: {
            auto [v, o] = gen.cond_pair();
            const OpenSet& inner = id == RuleId::U1 ? v.o2() : v.o1();
            Rational m1 = mass(sigma, os_intersect(inner, o.o1())).val;
            Rational m2 = mass(sigma, o.o2()).val;
            if (m1 == 0 || m2 == 0) {
              ++rep.inconclusive;
              break;
            }
            RuleInstance inst{id,
                              {MassAbove{os_intersect(inner, o.o1()), gen.below(m1)},
                               MassAbove{o.o2(), gen.below(m2)}},
                              {v, o}};
            check_conclusion(id, apply_forward(inst));
            break;
          }
          case RuleId::L2:
          case RuleId::U2: {
            auto [v, o] = gen.cond_pair();
            auto ends = cond_endpoints_exact(sigma, v, o);
            RuleInstance inst{id, {}};
            if (id == RuleId::L2) {
              if (ends.first == 0) {
                ++rep.inconclusive;
                break;
              }
              inst.premises = {CondAbove{v, o, gen.below(ends.first)}};
            } else {
              if (ends.second == 1) {
                ++rep.inconclusive;
                break;
              }
              inst.premises = {CondBelow{v, o, gen.above(ends.second)}};
            }
            auto back = check_backward(inst, sigma, 6);
            if (!back.verified && !back.inconclusive)
              rep.violations.push_back(std::string(rule_name(id)) + ": " +
                                       (back.notes.empty() ? "grid check failed" : back.notes[0]));
            if (back.inconclusive) ++rep.inconclusive;
            rep.indeterminate += back.indeterminate;
            break;
          }
          case RuleId::B1:
          case RuleId::B3: {
            auto [h, e] = gen.bayes_pair();
            auto whole = EventPair::whole(h.space());
            auto nh = event_negate(h);
            auto prior = cond_endpoints_exact(sigma, h, whole);
            auto like = cond_endpoints_exact(sigma, e, h);
            auto alt = cond_endpoints_exact(sigma, e, nh);
            RuleInstance inst{id, {}};
            if (id == RuleId::B1) {
              if (prior.first == 0 || like.first == 0 || alt.second == 1) {
                ++rep.inconclusive;
                break;
              }
              inst.premises = {CondAbove{h, whole, gen.below(prior.first)},
                               CondAbove{e, h, gen.below(like.first)},
                               CondBelow{e, nh, gen.above(alt.second)}};
            } else {
              if (prior.second == 1 || like.second == 1 || alt.first == 0) {
                ++rep.inconclusive;
                break;
              }
              inst.premises = {CondBelow{h, whole, gen.above(prior.second)},
                               CondBelow{e, h, gen.above(like.second)},
                               CondAbove{e, nh, gen.below(alt.first)}};
            }
            check_conclusion(id, apply_forward(inst));
            break;
          }
          case RuleId::B2:
          case RuleId::B4: {
            auto [h, e] = gen.bayes_pair();
            auto post = bayes_update(sigma, h, e);
            RuleInstance inst{id, {}};
            if (id == RuleId::B2) {
              if (post.lo.value() == 0) {
                ++rep.inconclusive;
                break;
              }
              inst.premises = {PostAbove{h, e, gen.below(post.lo.value())}};
            } else {
              if (post.hi.value() == 1) {
                ++rep.inconclusive;
                break;
              }
              inst.premises = {PostBelow{h, e, gen.above(post.hi.value())}};
            }
            auto back = check_backward(inst, sigma, 10);
            if (back.inconclusive) ++rep.inconclusive;
            rep.indeterminate += back.indeterminate;
            break;
          }
          case RuleId::CI5:
          case RuleId::CI7:
          case RuleId::SI9:
          case RuleId::CI6:
          case RuleId::CI8:
          case RuleId::SI10: {
            bool strong = id == RuleId::SI9 || id == RuleId::SI10;
            auto u = gen.two_sided_event();
            auto v = gen.two_sided_event();
            auto w = gen.classical_event();
            Independent ind{u, v, w, strong};
            if (!holds(sigma, ind)) {
              ++rep.inconclusive;
              break;
            }
            auto tri = embed_tri(u, v, w);
            auto ue = cond_endpoints_exact(sigma, tri.u_cyl, tri.w_cyl);
            auto ve = cond_endpoints_exact(sigma, tri.v_cyl, tri.w_cyl);
            Judgment pos = Positive{tri.w_cyl};
            Judgment ce = Classical{tri.w_cyl};
            if (id == RuleId::CI5) {
              if (ue.first == 0 || ve.first == 0) {
                ++rep.inconclusive;
                break;
              }
              RuleInstance inst{id,
                                {pos, ce, ind,
                                 CondAbove{tri.u_cyl, tri.w_cyl, gen.below(ue.first)},
                                 CondAbove{tri.v_cyl, tri.w_cyl, gen.below(ve.first)}}};
              check_conclusion(id, apply_forward(inst));
            } else if (id == RuleId::CI7 || id == RuleId::SI9) {
              if (ue.second == 1 || ve.second == 1) {
                ++rep.inconclusive;
                break;
              }
              RuleInstance inst{id,
                                {pos, ce, ind,
                                 CondBelow{tri.u_cyl, tri.w_cyl, gen.above(ue.second)},
                                 CondBelow{tri.v_cyl, tri.w_cyl, gen.above(ve.second)}}};
              check_conclusion(id, apply_forward(inst));
            } else {
              auto prod = cond_endpoints_exact(sigma, tri.uv_cyl, tri.w_cyl);
              std::optional<Judgment> premise;
              if (id == RuleId::CI6) {
                if (prod.first == 0) {
                  ++rep.inconclusive;
                  break;
                }
                premise = CondAbove{tri.uv_cyl, tri.w_cyl, gen.below(prod.first)};
              } else {
                if (prod.second == 1) {
                  ++rep.inconclusive;
                  break;
                }
                premise = CondBelow{tri.uv_cyl, tri.w_cyl, gen.above(prod.second)};
              }
              RuleInstance inst{id, {pos, ce, ind, *premise}};
              auto back = check_backward(inst, sigma, 12);
              if (back.inconclusive) ++rep.inconclusive;
              rep.indeterminate += back.indeterminate;
            }
            break;
          }
        }
      } catch (const Indeterminate&) {
        ++rep.indeterminate;
      }
    }
  }
  return rep;
}

namespace {

// Binary search for the extreme grid threshold where a monotone judgment
// family holds; the predicate must be antitone in k.
template <class Pred>
Rational grid_supremum(int grid_depth, Pred pass) {
  Rational scale = pow2(grid_depth);
  mpz_class lo = 0, hi(scale.get_num());  // pass(0) trivially, fail beyond the top
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (pass(Rational(mid) / scale))
      lo = mid;
    else
      hi = mid;
  }
  return Rational(lo) / scale;
}

}  // namespace

std::pair<Rational, Rational> completeness_approx(const Valuation& sigma, const EventPair& v,
                                                  const EventPair& o, int grid_depth) {
  if (!pos_check(sigma, o)) throw PositivityViolation("conditioning event has no mass");
  auto lower_pass = [&](const Rational& p) {
    if (p <= 0) return true;
    try {
      return holds(sigma, CondAbove{v, o, p});
    } catch (const Indeterminate&) {
      return false;
    }
  };
  // The upper judgment holds strictly above the endpoint, so the largest
  // grid value where it still fails sits just below; one grid step up is the
  // infimum over the grid.
  auto below_upper = [&](const Rational& q) {
    if (q <= 0) return true;
    try {
      return !holds(sigma, CondBelow{v, o, q});
    } catch (const Indeterminate&) {
      return false;
    }
  };
  Rational sup = grid_supremum(grid_depth, lower_pass);
  Rational inf = grid_supremum(grid_depth, below_upper) + Rational(1) / pow2(grid_depth);
  return {sup, inf};
}

std::pair<Rational, Rational> completeness_approx_posterior(const BayesAssessment& a,
                                                            int grid_depth) {
  auto lower_pass = [&](const Rational& p) {
    return p <= 0 || holds(a, Judgment{PostAbove{EventPair::bottom(SpaceDescriptor::cube(1)),
                                                 EventPair::bottom(SpaceDescriptor::cube(1)), p}});
  };
  auto below_upper = [&](const Rational& q) {
    return q <= 0 || !holds(a, Judgment{PostBelow{EventPair::bottom(SpaceDescriptor::cube(1)),
                                                  EventPair::bottom(SpaceDescriptor::cube(1)),
                                                  q}});
  };
  Rational sup = grid_supremum(grid_depth, lower_pass);
  Rational inf = grid_supremum(grid_depth, below_upper) + Rational(1) / pow2(grid_depth);
  return {sup, inf};
}

}  // namespace credal
