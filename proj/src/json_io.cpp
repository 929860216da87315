#include "credal/json_io.hpp"

namespace credal::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_at(const Json& j, const char* key, const char* where) {
  return rational_from_json(field(j, key, where));
}

}  // namespace

Json to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const CredalError& e) {
      fail("rational", e.what());
    }
  }
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  fail("rational", "expected a \"num/den\" string or a number");
}

Json to_json(const UnitValue& v) {
  if (v.is_exact()) return to_json(v.value());
  return Json{{"value", to_json(v.value())}, {"error", to_json(v.error())}};
}

UnitValue unit_value_from_json(const Json& j) {
  if (j.is_object())
    return UnitValue::approx(rational_at(j, "value", "unit value"),
                             rational_at(j, "error", "unit value"));
  return UnitValue::exact(rational_from_json(j));
}

Json to_json(const ProbInterval& p) {
  return Json{{"lo", to_json(p.lo)}, {"hi", to_json(p.hi)}};
}

ProbInterval prob_interval_from_json(const Json& j) {
  return make_prob_interval(unit_value_from_json(field(j, "lo", "interval")),
                            unit_value_from_json(field(j, "hi", "interval")));
}

Json to_json(const SpaceDescriptor& s) {
  if (s.is_cube()) return Json{{"cube", s.extent}};
  return Json{{"discrete", s.extent}};
}

SpaceDescriptor space_from_json(const Json& j) {
  if (!j.is_object()) fail("space", "expected {\"cube\": d} or {\"discrete\": n}");
  if (j.contains("cube")) return SpaceDescriptor::cube(j["cube"].get<int>());
  if (j.contains("discrete")) return SpaceDescriptor::discrete(j["discrete"].get<int>());
  fail("space", "expected {\"cube\": d} or {\"discrete\": n}");
}

namespace {

template <typename Ival>
Json ivals_to_json(const std::vector<std::vector<Ival>>& boxes) {
  Json out = Json::array();
  for (const auto& box : boxes) {
    Json jb = Json::array();
    for (const auto& iv : box) jb.push_back(Json::array({to_json(iv.lo), to_json(iv.hi)}));
    out.push_back(std::move(jb));
  }
  return out;
}

template <typename Ival>
std::vector<std::vector<Ival>> ivals_from_json(const Json& j, const char* where) {
  if (!j.is_array()) fail(where, "\"boxes\" must be an array of boxes");
  std::vector<std::vector<Ival>> out;
  for (const auto& jb : j) {
    if (!jb.is_array()) fail(where, "a box must be an array of [lo, hi] pairs");
    std::vector<Ival> box;
    for (const auto& jiv : jb) {
      if (!jiv.is_array() || jiv.size() != 2) fail(where, "an interval must be [lo, hi]");
      box.push_back({rational_from_json(jiv[0]), rational_from_json(jiv[1])});
    }
    out.push_back(std::move(box));
  }
  return out;
}

std::vector<int> points_from_json(const Json& j, const char* where) {
  if (!j.is_array()) fail(where, "\"points\" must be an array of indices");
  std::vector<int> pts;
  for (const auto& p : j) pts.push_back(p.get<int>());
  return pts;
}

}  // namespace

Json to_json(const OpenSet& o) {
  Json out{{"space", to_json(o.space())}};
  if (o.space().is_cube())
    out["boxes"] = ivals_to_json(o.boxes());
  else
    out["points"] = o.points();
  return out;
}

OpenSet open_set_from_json(const Json& j) {
  auto space = space_from_json(field(j, "space", "open set"));
  if (space.is_cube())
    return OpenSet::from_boxes(space,
                               ivals_from_json<OpenIval>(field(j, "boxes", "open set"), "open set"));
  return OpenSet::from_points(space, points_from_json(field(j, "points", "open set"), "open set"));
}

Json to_json(const ClosedSet& c) {
  Json out{{"space", to_json(c.space())}};
  if (c.space().is_cube())
    out["boxes"] = ivals_to_json(c.boxes());
  else
    out["points"] = c.points();
  return out;
}

ClosedSet closed_set_from_json(const Json& j) {
  auto space = space_from_json(field(j, "space", "closed set"));
  if (space.is_cube())
    return ClosedSet::from_boxes(
        space, ivals_from_json<ClosedIval>(field(j, "boxes", "closed set"), "closed set"));
  return ClosedSet::from_points(space,
                                points_from_json(field(j, "points", "closed set"), "closed set"));
}

Json to_json(const EventPair& e) {
  return Json{{"in", to_json(e.o1())}, {"out", to_json(e.o2())}};
}

EventPair event_pair_from_json(const Json& j) {
  return EventPair::make(open_set_from_json(field(j, "in", "event pair")),
                         open_set_from_json(field(j, "out", "event pair")));
}

namespace {

Json rationals_to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j, const char* where) {
  if (!j.is_array()) fail(where, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace

Json to_json(const Valuation& v) {
  struct Visitor {
    const Valuation& val;
    Json operator()(const LebesgueLaw&) const {
      Json out{{"law", "lebesgue"}};
      if (val.space().extent != 1) out["dim"] = val.space().extent;
      return out;
    }
    Json operator()(const PiecewiseDensityLaw& l) const {
      return Json{{"law", "piecewise"},
                  {"breaks", rationals_to_json(l.breaks)},
                  {"weights", rationals_to_json(l.weights)}};
    }
    Json operator()(const BetaLaw& l) const {
      return Json{{"law", "beta"}, {"alpha", l.alpha}, {"beta", l.beta}, {"tol", l.tol}};
    }
    Json operator()(const FatCantorLaw& l) const {
      return Json{{"law", "fatcantor"}, {"r", to_json(l.r)}, {"depth", l.depth}};
    }
    Json operator()(const DiscreteLaw& l) const {
      return Json{{"law", "discrete"}, {"p", rationals_to_json(l.p)}};
    }
    Json operator()(const MixtureLaw& l) const {
      Json parts = Json::array();
      for (const auto& [w, part] : l.parts)
        parts.push_back(Json::array({to_json(w), to_json(part)}));
      return Json{{"law", "mixture"}, {"parts", std::move(parts)}};
    }
    Json operator()(const ProductLaw& l) const {
      Json factors = Json::array();
      for (const auto& f : l.factors) factors.push_back(to_json(f));
      return Json{{"law", "product"}, {"factors", std::move(factors)}};
    }
  };
  return std::visit(Visitor{v}, v.law());
}

Valuation valuation_from_json(const Json& j) {
  const auto& law = field(j, "law", "valuation");
  if (!law.is_string()) fail("valuation", "\"law\" must be a string");
  std::string name = law.get<std::string>();
  if (name == "lebesgue") return Valuation::lebesgue(j.value("dim", 1));
  if (name == "piecewise")
    return Valuation::piecewise(rationals_from_json(field(j, "breaks", "piecewise"), "piecewise"),
                                rationals_from_json(field(j, "weights", "piecewise"), "piecewise"));
  if (name == "beta")
    return Valuation::beta(field(j, "alpha", "beta law").get<double>(),
                           field(j, "beta", "beta law").get<double>(), j.value("tol", 1e-12));
  if (name == "fatcantor")
    return Valuation::fat_cantor(rational_at(j, "r", "fatcantor"),
                                 field(j, "depth", "fatcantor").get<int>());
  if (name == "discrete")
    return Valuation::discrete(rationals_from_json(field(j, "p", "discrete"), "discrete"));
  if (name == "mixture") {
    const auto& jp = field(j, "parts", "mixture");
    if (!jp.is_array()) fail("mixture", "\"parts\" must be an array of [weight, valuation]");
    std::vector<std::pair<Rational, Valuation>> parts;
    for (const auto& part : jp) {
      if (!part.is_array() || part.size() != 2)
        fail("mixture", "each part must be [weight, valuation]");
      parts.emplace_back(rational_from_json(part[0]), valuation_from_json(part[1]));
    }
    return Valuation::mixture(std::move(parts));
  }
  if (name == "product") {
    const auto& jf = field(j, "factors", "product");
    if (!jf.is_array()) fail("product", "\"factors\" must be an array of valuations");
    std::vector<Valuation> factors;
    for (const auto& f : jf) factors.push_back(valuation_from_json(f));
    return Valuation::product(std::move(factors));
  }
  fail("valuation", "unknown law \"" + name + "\"");
}

Json to_json(const CredalSet& k) {
  Json vertices = Json::array();
  for (const auto& v : k.vertices()) vertices.push_back(to_json(v));
  return Json{{"vertices", std::move(vertices)}};
}

CredalSet credal_set_from_json(const Json& j) {
  const auto& jv = field(j, "vertices", "credal set");
  if (!jv.is_array() || jv.empty()) fail("credal set", "\"vertices\" must be a nonempty array");
  std::vector<Valuation> vertices;
  for (const auto& v : jv) vertices.push_back(valuation_from_json(v));
  return CredalSet::make(std::move(vertices));
}

Json to_json(const BayesAssessment& a) {
  return Json{{"prior", to_json(a.prior)},
              {"likelihood", to_json(a.likelihood)},
              {"alt_likelihood", to_json(a.alt_likelihood)}};
}

BayesAssessment assessment_from_json(const Json& j) {
  return {prob_interval_from_json(field(j, "prior", "assessment")),
          prob_interval_from_json(field(j, "likelihood", "assessment")),
          prob_interval_from_json(field(j, "alt_likelihood", "assessment"))};
}

namespace {

std::vector<WeightBound> weight_bounds_from_json(const Json& j, const char* where) {
  if (!j.is_array()) fail(where, "expected an array of [lo, hi] weight bounds");
  std::vector<WeightBound> out;
  for (const auto& w : j) {
    if (!w.is_array() || w.size() != 2) fail(where, "a weight bound must be [lo, hi]");
    out.push_back({rational_from_json(w[0]), rational_from_json(w[1])});
  }
  return out;
}

Json weight_bounds_to_json(const std::vector<WeightBound>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(Json::array({to_json(w.lo), to_json(w.hi)}));
  return out;
}

}  // namespace

Json to_json(const IFSSystem& s) {
  Json maps = Json::array();
  for (const auto& m : s.maps()) maps.push_back(Json{{"a", to_json(m.a)}, {"b", to_json(m.b)}});
  return Json{{"maps", std::move(maps)}, {"weights", weight_bounds_to_json(s.weights())}};
}

IFSSystem ifs_from_json(const Json& j) {
  const auto& jm = field(j, "maps", "ifs");
  if (!jm.is_array()) fail("ifs", "\"maps\" must be an array of {\"a\",\"b\"}");
  std::vector<AffineMap> maps;
  for (const auto& m : jm)
    maps.push_back({rational_at(m, "a", "ifs map"), rational_at(m, "b", "ifs map")});
  return IFSSystem::make(std::move(maps),
                         weight_bounds_from_json(field(j, "weights", "ifs"), "ifs"));
}

Json to_json(const IntervalTransitionMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) rows.push_back(weight_bounds_to_json(row));
  return Json{{"n", m.size()}, {"rows", std::move(rows)}};
}

IntervalTransitionMatrix matrix_from_json(const Json& j) {
  const auto& jr = field(j, "rows", "matrix");
  if (!jr.is_array()) fail("matrix", "\"rows\" must be an array of rows");
  std::vector<std::vector<WeightBound>> rows;
  for (const auto& row : jr) rows.push_back(weight_bounds_from_json(row, "matrix row"));
  if (j.contains("n") && j["n"].get<int>() != static_cast<int>(rows.size()))
    fail("matrix", "\"n\" does not match the number of rows");
  return IntervalTransitionMatrix::make(std::move(rows));
}

namespace {

std::string provenance_to_string(StationaryBounds::Provenance p) {
  switch (p) {
    case StationaryBounds::Provenance::Exact: return "exact";
    case StationaryBounds::Provenance::VertexInner: return "vertices";
    case StationaryBounds::Provenance::Refined: return "refined";
  }
  fail("bounds", "unknown provenance");
}

StationaryBounds::Provenance provenance_from_string(const std::string& s) {
  if (s == "exact") return StationaryBounds::Provenance::Exact;
  if (s == "vertices") return StationaryBounds::Provenance::VertexInner;
  if (s == "refined") return StationaryBounds::Provenance::Refined;
  fail("bounds", "unknown provenance \"" + s + "\"");
}

}  // namespace

Json to_json(const StationaryBounds& b) {
  Json per_state = Json::array();
  for (const auto& p : b.per_state) per_state.push_back(to_json(p));
  return Json{{"per_state", std::move(per_state)},
              {"provenance", provenance_to_string(b.provenance)},
              {"warnings", b.warnings}};
}

StationaryBounds stationary_bounds_from_json(const Json& j) {
  StationaryBounds out;
  for (const auto& p : field(j, "per_state", "bounds")) out.per_state.push_back(prob_interval_from_json(p));
  out.provenance = provenance_from_string(field(j, "provenance", "bounds").get<std::string>());
  if (j.contains("warnings")) out.warnings = j["warnings"].get<std::vector<std::string>>();
  return out;
}

Json to_json(const Judgment& j) {
  struct Visitor {
    Json operator()(const MassAbove& a) const {
      return Json{{"kind", "mass-above"}, {"set", to_json(a.v)}, {"p", to_json(a.p)}};
    }
    Json operator()(const CondAbove& a) const {
      return Json{
          {"kind", "cond-above"}, {"v", to_json(a.v)}, {"o", to_json(a.o)}, {"p", to_json(a.p)}};
    }
    Json operator()(const CondBelow& a) const {
      return Json{
          {"kind", "cond-below"}, {"v", to_json(a.v)}, {"o", to_json(a.o)}, {"q", to_json(a.q)}};
    }
    Json operator()(const PostAbove& a) const {
      return Json{
          {"kind", "post-above"}, {"h", to_json(a.h)}, {"e", to_json(a.e)}, {"p", to_json(a.p)}};
    }
    Json operator()(const PostBelow& a) const {
      return Json{
          {"kind", "post-below"}, {"h", to_json(a.h)}, {"e", to_json(a.e)}, {"q", to_json(a.q)}};
    }
    Json operator()(const Positive& a) const {
      return Json{{"kind", "positive"}, {"o", to_json(a.o)}};
    }
    Json operator()(const Classical& a) const {
      return Json{{"kind", "classical"}, {"o", to_json(a.o)}};
    }
    Json operator()(const Independent& a) const {
      return Json{{"kind", "independent"},
                  {"u", to_json(a.u)},
                  {"v", to_json(a.v)},
                  {"w", to_json(a.w)},
                  {"strong", a.strong}};
    }
  };
  return std::visit(Visitor{}, j);
}

Judgment judgment_from_json(const Json& j) {
  std::string kind = field(j, "kind", "judgment").get<std::string>();
  auto ep = [&](const char* key) { return event_pair_from_json(field(j, key, "judgment")); };
  if (kind == "mass-above")
    return MassAbove{open_set_from_json(field(j, "set", "judgment")),
                     rational_at(j, "p", "judgment")};
  if (kind == "cond-above") return CondAbove{ep("v"), ep("o"), rational_at(j, "p", "judgment")};
  if (kind == "cond-below") return CondBelow{ep("v"), ep("o"), rational_at(j, "q", "judgment")};
  if (kind == "post-above") return PostAbove{ep("h"), ep("e"), rational_at(j, "p", "judgment")};
  if (kind == "post-below") return PostBelow{ep("h"), ep("e"), rational_at(j, "q", "judgment")};
  if (kind == "positive") return Positive{ep("o")};
  if (kind == "classical") return Classical{ep("o")};
  if (kind == "independent")
    return Independent{ep("u"), ep("v"), ep("w"), j.value("strong", false)};
  fail("judgment", "unknown kind \"" + kind + "\"");
}

std::string rule_id_to_string(RuleId id) {
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
    case RuleId::L1BrokenSelfTest: return "L1-broken-self-test";
  }
  fail("rule", "unknown rule id");
}

RuleId rule_id_from_string(const std::string& s) {
  static const std::pair<const char*, RuleId> table[] = {
      {"L1", RuleId::L1},   {"L2", RuleId::L2},   {"U1", RuleId::U1},
      {"U2", RuleId::U2},   {"B1", RuleId::B1},   {"B2", RuleId::B2},
      {"B3", RuleId::B3},   {"B4", RuleId::B4},   {"CI5", RuleId::CI5},
      {"CI6", RuleId::CI6}, {"CI7", RuleId::CI7}, {"CI8", RuleId::CI8},
      {"SI9", RuleId::SI9}, {"SI10", RuleId::SI10},
      {"L1-broken-self-test", RuleId::L1BrokenSelfTest}};
  for (const auto& [name, id] : table)
    if (s == name) return id;
  fail("rule", "unknown rule \"" + s + "\"");
}

Json to_json(const RuleInstance& r) {
  Json premises = Json::array();
  for (const auto& p : r.premises) premises.push_back(to_json(p));
  Json out{{"rule", rule_id_to_string(r.id)}, {"premises", std::move(premises)}};
  if (!r.events.empty()) {
    Json events = Json::array();
    for (const auto& e : r.events) events.push_back(to_json(e));
    out["events"] = std::move(events);
  }
  return out;
}

RuleInstance rule_instance_from_json(const Json& j) {
  RuleInstance out;
  out.id = rule_id_from_string(field(j, "rule", "rule instance").get<std::string>());
  for (const auto& p : field(j, "premises", "rule instance"))
    out.premises.push_back(judgment_from_json(p));
  if (j.contains("events"))
    for (const auto& e : j["events"]) out.events.push_back(event_pair_from_json(e));
  return out;
}

Json to_json(const GraphoidReport& r) {
  return Json{{"preconditions_ok", r.preconditions_ok},
              {"premises_hold", r.premises_hold},
              {"conclusion_holds", r.conclusion_holds},
              {"counterexample", r.counterexample()},
              {"notes", r.notes}};
}

Json to_json(const BackwardReport& r) {
  return Json{{"premise_holds", r.premise_holds}, {"verified", r.verified},
              {"inconclusive", r.inconclusive},  {"checked", r.checked},
              {"indeterminate", r.indeterminate}, {"witnesses", rationals_to_json(r.witnesses)},
              {"notes", r.notes}};
}

Json to_json(const SweepReport& r) {
  return Json{{"instances", r.instances},
              {"indeterminate", r.indeterminate},
              {"inconclusive", r.inconclusive},
              {"violations", r.violations},
              {"ok", r.ok()}};
}

Json to_json(const EnvelopeReport& r) {
  Json vertices = Json::array();
  for (const auto& v : r.vertices) vertices.push_back(rationals_to_json(v));
  Json per_vertex = Json::array();
  for (const auto& [e1, e2] : r.per_vertex)
    per_vertex.push_back(Json{{"c1", to_json(e1)}, {"c2", to_json(e2)}});
  return Json{{"outer", to_json(r.outer)},
              {"vertices", std::move(vertices)},
              {"per_vertex", std::move(per_vertex)}};
}

Json envelope(const std::string& kind, Json payload) {
  return Json{{"schema", kSchemaTag}, {"kind", kind}, {"result", std::move(payload)}};
}

}  // namespace credal::io
