#include "credal/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "credal/json_io.hpp"

namespace credal::cli {

namespace {

using io::Json;

struct Options {
  std::string input;    // path to a JSON payload file
  std::string inline_json;
  std::string format = "table";
  double beta_tol = 1e-12;
  int grid_depth = 10;
  int ifs_depth = 12;
  std::string markov_mode = "vertices";
  int state = 0;
  int steps = 16;
};

std::string classify(const CredalError& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
  if (dynamic_cast<const PositivityViolation*>(&e)) return "positivity-violation";
  if (dynamic_cast<const CEViolation*>(&e)) return "ce-violation";
  if (dynamic_cast<const DegenerateDenominator*>(&e)) return "degenerate-denominator";
  if (dynamic_cast<const SpaceMismatch*>(&e)) return "space-mismatch";
  if (dynamic_cast<const Indeterminate*>(&e)) return "indeterminate";
  if (dynamic_cast<const EmptyAdmissibleSet*>(&e)) return "empty-admissible-set";
  if (dynamic_cast<const EmptyRow*>(&e)) return "empty-row";
  if (dynamic_cast<const CoveringViolation*>(&e)) return "covering-violation";
  if (dynamic_cast<const Reducible*>(&e)) return "reducible";
  if (dynamic_cast<const Periodic*>(&e)) return "periodic";
  if (dynamic_cast<const DegenerateChain*>(&e)) return "degenerate-chain";
  if (dynamic_cast<const AllVerticesDegenerate*>(&e)) return "all-vertices-degenerate";
  if (dynamic_cast<const SchemaMismatch*>(&e)) return "schema-mismatch";
  if (dynamic_cast<const NoUpperBound*>(&e)) return "no-upper-bound";
  if (dynamic_cast<const OrderViolation*>(&e)) return "order-violation";
  if (dynamic_cast<const NonConvergence*>(&e)) return "non-convergence";
  if (dynamic_cast<const RangeViolation*>(&e)) return "range-violation";
  return "credal-error";
}

void diagnose(std::ostream& err, const std::string& type, const std::string& message) {
  Json d{{"schema", io::kSchemaTag}, {"error", Json{{"type", type}, {"message", message}}}};
  err << d.dump() << '\n';
}

// Beta laws default their CDF tolerance to the --beta-tol flag when the
// payload omits it.
void apply_beta_tol(Json& j, double tol) {
  if (j.is_object()) {
    if (j.value("law", "") == "beta" && !j.contains("tol")) j["tol"] = tol;
    for (auto& [key, value] : j.items()) apply_beta_tol(value, tol);
  } else if (j.is_array()) {
    for (auto& value : j) apply_beta_tol(value, tol);
  }
}

Json load_payload(const Options& opt) {
  std::string text;
  if (!opt.inline_json.empty()) {
    text = opt.inline_json;
  } else if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) throw ParseError("cannot open input file: " + opt.input);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    throw ParseError("no input: pass --input FILE or --json TEXT");
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("the payload must be a JSON object");
  // Fixture files wrap the payload in the self-describing envelope.
  if (j.contains("schema") && j.contains("payload")) j = j["payload"];
  apply_beta_tol(j, opt.beta_tol);
  return j;
}

std::string fmt_interval(const ProbInterval& p) {
  return "[" + format_decimal(p.lo.value()) + "," + format_decimal(p.hi.value()) + "]";
}

void emit_result(std::ostream& out, const Options& opt, const std::string& kind, Json result,
                 const std::string& table_text) {
  if (opt.format == "json")
    out << io::envelope(kind, std::move(result)).dump(2) << '\n';
  else
    out << table_text;
}

// ---- subcommand handlers ----------------------------------------------

void run_eval(const Json& j, const Options& opt, std::ostream& out) {
  auto sigma = io::valuation_from_json(j.at("valuation"));
  auto set = io::open_set_from_json(j.at("set"));
  auto r = eval_open(sigma, set);
  Json result{{"value", io::to_json(r.value.value())}, {"error", io::to_json(r.value.error())}};
  std::ostringstream t;
  t << "value " << format_decimal(r.value.value(), 2, 6);
  if (!r.value.is_exact()) t << "  (error bound " << format_decimal(r.value.error(), 2, 6) << ")";
  t << '\n';
  emit_result(out, opt, "eval", std::move(result), t.str());
}

void run_cond(const Json& j, const Options& opt, std::ostream& out) {
  auto sigma = io::valuation_from_json(j.at("valuation"));
  auto v = io::event_pair_from_json(j.at("v"));
  auto o = io::event_pair_from_json(j.at("o"));
  auto interval = cond_prob(sigma, v, o);

  std::optional<Rational> classical;
  if (j.contains("classical_v") && j.contains("classical_o")) {
    auto a = io::open_set_from_json(j["classical_v"]);
    auto b = io::open_set_from_json(j["classical_o"]);
    auto num = eval_open(sigma, os_intersect(a, b)).value;
    auto den = eval_open(sigma, b).value;
    classical = (num.scalar() / den.scalar()).val;
  }

  Json result{{"interval", io::to_json(interval)}};
  std::vector<std::pair<std::string, ProbInterval>> rows;
  if (classical) {
    result["classical"] = io::to_json(*classical);
    result["contains_classical"] = interval.contains_value(*classical);
    rows.emplace_back("Classical", make_prob_interval(*classical, *classical));
  }
  rows.emplace_back("Interval", interval);
  std::ostringstream t;
  emit_comparison_table(t, rows, classical);
  emit_result(out, opt, "cond", std::move(result), t.str());
}

void run_bayes(const Json& j, const Options& opt, std::ostream& out) {
  ProbInterval posterior = [&] {
    if (j.contains("assessment"))
      return bayes_from_assessment(io::assessment_from_json(j["assessment"]));
    auto sigma = io::valuation_from_json(j.at("valuation"));
    return bayes_update(sigma, io::event_pair_from_json(j.at("h")),
                        io::event_pair_from_json(j.at("e")));
  }();

  std::optional<Rational> classical;
  if (j.contains("classical")) {
    const auto& c = j["classical"];
    auto u = [&](const char* key) {
      return UnitValue::exact(io::rational_from_json(c.at(key)));
    };
    classical = bayes_kernel(u("prior"), u("likelihood"), u("alt_likelihood")).value();
  }

  Json result{{"interval", io::to_json(posterior)}};
  std::vector<std::pair<std::string, ProbInterval>> rows;
  if (classical) {
    result["classical"] = io::to_json(*classical);
    result["contains_classical"] = posterior.contains_value(*classical);
    rows.emplace_back("Classical", make_prob_interval(*classical, *classical));
  }
  rows.emplace_back("Interval", posterior);
  std::ostringstream t;
  emit_comparison_table(t, rows, classical);
  emit_result(out, opt, "bayes", std::move(result), t.str());
}

void run_credal(const Json& j, const Options& opt, std::ostream& out) {
  std::string mode = j.value("mode", "event");
  ProbInterval envelope_interval = [&] {
    if (mode == "bayes") {
      std::vector<BayesAssessment> as;
      for (const auto& a : j.at("assessments")) as.push_back(io::assessment_from_json(a));
      return credal_bayes(as);
    }
    auto k = io::credal_set_from_json(j.at("credal"));
    if (mode == "event") return credal_event_probability(k, io::event_pair_from_json(j.at("e")));
    if (mode == "cond")
      return credal_conditional(k, io::event_pair_from_json(j.at("v")),
                                io::event_pair_from_json(j.at("o")));
    throw ParseError("credal mode must be event, cond, or bayes");
  }();
  Json result{{"interval", io::to_json(envelope_interval)}};
  std::ostringstream t;
  emit_comparison_table(t, {{"Envelope", envelope_interval}}, std::nullopt);
  emit_result(out, opt, "credal", std::move(result), t.str());
}

GraphoidRule graphoid_rule_from_string(const std::string& s) {
  if (s == "symmetry") return GraphoidRule::Symmetry;
  if (s == "weak-union") return GraphoidRule::WeakUnion;
  if (s == "contraction") return GraphoidRule::Contraction;
  if (s == "intersection") return GraphoidRule::Intersection;
  throw ParseError("unknown graphoid rule \"" + s + "\"");
}

CIQuery ci_query_from_json(const Json& j) {
  CIQuery q{io::event_pair_from_json(j.at("u")), io::event_pair_from_json(j.at("v")),
            io::event_pair_from_json(j.at("w")), io::valuation_from_json(j.at("joint"))};
  auto axes = [&](const char* key) {
    std::vector<int> out;
    if (j.contains(key))
      for (const auto& a : j[key]) out.push_back(a.get<int>());
    return out;
  };
  q.u_axes = axes("u_axes");
  q.v_axes = axes("v_axes");
  q.w_axes = axes("w_axes");
  if (j.contains("tol")) q.tol = io::rational_from_json(j["tol"]);
  return q;
}

void run_ci(const Json& j, const Options& opt, std::ostream& out) {
  std::string mode = j.value("mode", "check");
  if (mode == "check" || mode == "check-strong") {
    auto q = ci_query_from_json(j);
    bool ok = mode == "check" ? check_ci(q) : check_strong_ci(q);
    emit_result(out, opt, "ci", Json{{"holds", ok}},
                std::string(mode) + (ok ? ": holds\n" : ": fails\n"));
    return;
  }
  if (mode == "graphoid") {
    auto rep = validate_graphoid(graphoid_rule_from_string(j.at("rule").get<std::string>()),
                                 io::valuation_from_json(j.at("joint")),
                                 io::event_pair_from_json(j.at("u")),
                                 io::event_pair_from_json(j.at("v")),
                                 io::event_pair_from_json(j.at("w")),
                                 io::event_pair_from_json(j.at("z")));
    std::ostringstream t;
    t << "preconditions " << (rep.preconditions_ok ? "ok" : "failed") << ", premises "
      << (rep.premises_hold ? "hold" : "fail") << ", conclusion "
      << (rep.conclusion_holds ? "holds" : "fails") << '\n';
    for (const auto& n : rep.notes) t << "note: " << n << '\n';
    emit_result(out, opt, "ci", io::to_json(rep), t.str());
    return;
  }
  if (mode == "combine" || mode == "combine-frechet" || mode == "combine-strong") {
    auto cu = io::prob_interval_from_json(j.at("cu"));
    auto cv = io::prob_interval_from_json(j.at("cv"));
    auto frechet = combine_ci_frechet(cu, cv);
    auto strong = combine_ci_strong(cu, cv);

    std::optional<Rational> classical;
    if (j.contains("classical_cu") && j.contains("classical_cv"))
      classical = io::rational_from_json(j["classical_cu"]) *
                  io::rational_from_json(j["classical_cv"]);

    Json result;
    std::vector<std::pair<std::string, ProbInterval>> rows;
    if (classical) {
      result["classical"] = io::to_json(make_prob_interval(*classical, *classical));
      rows.emplace_back("Classical", make_prob_interval(*classical, *classical));
    }
    if (mode != "combine-strong") {
      result["frechet"] = io::to_json(frechet);
      rows.emplace_back("Frechet", frechet);
    }
    if (mode != "combine-frechet") {
      result["strong"] = io::to_json(strong);
      rows.emplace_back("Strong", strong);
    }
    std::ostringstream t;
    emit_comparison_table(t, rows, classical);
    emit_result(out, opt, "ci", std::move(result), t.str());
    return;
  }
  throw ParseError("ci mode must be check, check-strong, combine[-frechet|-strong], or graphoid");
}

void run_logic(const Json& j, const Options& opt, std::ostream& out) {
  std::string mode = j.value("mode", "apply");
  if (mode == "apply") {
    auto conclusion = apply_forward(io::rule_instance_from_json(j));
    std::ostringstream t;
    t << "conclusion: " << io::to_json(conclusion).dump() << '\n';
    emit_result(out, opt, "logic", Json{{"conclusion", io::to_json(conclusion)}}, t.str());
    return;
  }
  if (mode == "backward") {
    auto rep = check_backward(io::rule_instance_from_json(j),
                              io::valuation_from_json(j.at("model")), opt.grid_depth);
    std::ostringstream t;
    t << (rep.verified ? "verified" : rep.inconclusive ? "inconclusive" : "refuted") << " after "
      << rep.checked << " grid points\n";
    emit_result(out, opt, "logic", io::to_json(rep), t.str());
    return;
  }
  if (mode == "sweep") {
    std::vector<RuleId> rules;
    for (const auto& r : j.at("rules")) rules.push_back(io::rule_id_from_string(r.get<std::string>()));
    auto rep = soundness_sweep(io::valuation_from_json(j.at("model")), rules,
                               j.value("instances", 100), j.value("seed", 2026u));
    std::ostringstream t;
    t << rep.instances << " instances, " << rep.violations.size() << " violations, "
      << rep.indeterminate << " indeterminate, " << rep.inconclusive << " inconclusive\n";
    for (const auto& v : rep.violations) t << "violation: " << v << '\n';
    emit_result(out, opt, "logic", io::to_json(rep), t.str());
    return;
  }
  throw ParseError("logic mode must be apply, backward, or sweep");
}

void run_ifs(const Json& j, const Options& opt, std::ostream& out) {
  auto system = io::ifs_from_json(j.at("system"));
  std::string mode = j.value("mode", "envelope");
  if (mode == "vertices") {
    auto vertices = admissible_vertices(system.weights());
    Json jv = Json::array();
    std::ostringstream t;
    for (const auto& v : vertices) {
      Json row = Json::array();
      t << "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        row.push_back(io::to_json(v[i]));
        t << (i ? ", " : "") << rational_to_string(v[i]);
      }
      t << ")\n";
      jv.push_back(std::move(row));
    }
    emit_result(out, opt, "ifs", Json{{"vertices", std::move(jv)}}, t.str());
    return;
  }
  if (mode == "eval") {
    std::vector<Rational> p;
    for (const auto& x : j.at("p")) p.push_back(io::rational_from_json(x));
    auto enclosure =
        eval_closed_vertex(system, p, io::closed_set_from_json(j.at("set")), opt.ifs_depth);
    std::ostringstream t;
    emit_comparison_table(t, {{"Enclosure", enclosure}}, std::nullopt);
    emit_result(out, opt, "ifs", Json{{"interval", io::to_json(enclosure)}}, t.str());
    return;
  }
  if (mode == "envelope") {
    auto rep = credal_envelope_closed(system, io::closed_set_from_json(j.at("c1")),
                                      io::closed_set_from_json(j.at("c2")), opt.ifs_depth);
    std::ostringstream t;
    for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
      t << "vertex " << i << ": c1 " << fmt_interval(rep.per_vertex[i].first) << ", c2 "
        << fmt_interval(rep.per_vertex[i].second) << '\n';
    }
    t << "outer " << fmt_interval(rep.outer) << '\n';
    emit_result(out, opt, "ifs", io::to_json(rep), t.str());
    return;
  }
  if (mode == "attractor") {
    auto a = attractor_approx(system, opt.ifs_depth);
    std::ostringstream t;
    t << a.boxes().size() << " intervals\n";
    emit_result(out, opt, "ifs", io::to_json(a), t.str());
    return;
  }
  throw ParseError("ifs mode must be vertices, eval, envelope, or attractor");
}

void run_markov(const Json& j, const Options& opt, std::ostream& out) {
  auto itm = io::matrix_from_json(j.contains("matrix") ? j["matrix"] : j);
  StationaryBounds bounds = [&] {
    if (opt.markov_mode == "exact") return two_state_exact(itm);
    if (opt.markov_mode == "vertices") return stationary_bounds_vertices(itm);
    if (opt.markov_mode == "refine") return refine_bounds_local(itm, opt.state, opt.steps);
    throw ParseError("markov mode must be exact, vertices, or refine");
  }();
  std::ostringstream t;
  for (std::size_t k = 0; k < bounds.per_state.size(); ++k)
    t << "state " << k + 1 << "  " << fmt_interval(bounds.per_state[k]) << "  "
      << format_decimal(bounds.per_state[k].width()) << '\n';
  for (const auto& w : bounds.warnings) t << "warning: " << w << '\n';
  emit_result(out, opt, "markov", io::to_json(bounds), t.str());
}

// ---- worked-example fixtures -------------------------------------------

Json fixture_envelope(const std::string& subcommand, Json payload) {
  return Json{{"schema", io::kSchemaTag},
              {"subcommand", subcommand},
              {"payload", std::move(payload)}};
}

void write_fixtures(const std::string& dir, std::ostream& out) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto boxes1 = [](std::vector<std::pair<const char*, const char*>> ivs) {
    Json jb = Json::array();
    for (const auto& [lo, hi] : ivs) jb.push_back(Json::array({Json::array({lo, hi})}));
    return Json{{"space", Json{{"cube", 1}}}, {"boxes", std::move(jb)}};
  };
  auto ep = [&](Json inside, Json outside) {
    return Json{{"in", std::move(inside)}, {"out", std::move(outside)}};
  };

  std::vector<std::pair<std::string, Json>> fixtures;
  fixtures.emplace_back(
      "cond-interval.json",
      fixture_envelope(
          "cond",
          Json{{"valuation", Json{{"law", "lebesgue"}}},
               {"v", ep(boxes1({{"4/5", "17/20"}}), boxes1({{"0", "7/10"}, {"19/20", "1"}}))},
               {"o", ep(boxes1({{"3/5", "1"}}), boxes1({{"1/10", "3/5"}}))},
               {"classical_v", boxes1({{"7/10", "9/10"}})},
               {"classical_o", boxes1({{"0", "1/10"}, {"3/5", "1"}})}}));
  fixtures.emplace_back(
      "bayes-medical.json",
      fixture_envelope(
          "bayes",
          Json{{"assessment", Json{{"prior", Json{{"lo", "1/100"}, {"hi", "1/20"}}},
                                   {"likelihood", Json{{"lo", "17/20"}, {"hi", "19/20"}}},
                                   {"alt_likelihood", Json{{"lo", "1/100"}, {"hi", "1/10"}}}}},
               {"classical", Json{{"prior", "3/100"},
                                  {"likelihood", "9/10"},
                                  {"alt_likelihood", "11/200"}}}}));
  fixtures.emplace_back(
      "ci-combine.json",
      fixture_envelope("ci", Json{{"mode", "combine"},
                                  {"cu", Json{{"lo", "3/5"}, {"hi", "4/5"}}},
                                  {"cv", Json{{"lo", "7/10"}, {"hi", "9/10"}}},
                                  {"classical_cu", "7/10"},
                                  {"classical_cv", "4/5"}}));
  fixtures.emplace_back(
      "ifs-cantor.json",
      fixture_envelope(
          "ifs",
          Json{{"mode", "envelope"},
               {"system", Json{{"maps", Json::array({Json{{"a", "1/3"}, {"b", "0"}},
                                                     Json{{"a", "1/3"}, {"b", "2/3"}}})},
                               {"weights", Json::array({Json::array({"0", "1/2"}),
                                                        Json::array({"1/2", "1"})})}}},
               {"c1",
                Json{{"space", Json{{"cube", 1}}},
                     {"boxes", Json::array({Json::array({Json::array({"0", "1"})})})}}},
               {"c2",
                Json{{"space", Json{{"cube", 1}}},
                     {"boxes", Json::array({Json::array({Json::array({"1", "1"})})})}}}}));
  fixtures.emplace_back(
      "markov-2state.json",
      fixture_envelope(
          "markov",
          Json{{"matrix",
                Json{{"n", 2},
                     {"rows", Json::array(
                                  {Json::array({Json::array({"1/5", "2/5"}),
                                                Json::array({"3/5", "4/5"})}),
                                   Json::array({Json::array({"3/10", "1/2"}),
                                                Json::array({"1/2", "7/10"})})})}}}}));

  for (const auto& [name, content] : fixtures) {
    std::ofstream f(fs::path(dir) / name);
    f << content.dump(2) << '\n';
    out << name << '\n';
  }
}

int thread_cap() {
  // Caps worker parallelism; the modules currently run single-threaded, so
  // the value is validated and recorded but changes nothing.
  const char* env = std::getenv("CREDAL_KERNEL_THREADS");
  if (!env) return 0;
  try {
    int n = std::stoi(env);
    if (n < 1) throw ParseError("CREDAL_KERNEL_THREADS must be >= 1");
    return n;
  } catch (const std::logic_error&) {
    throw ParseError("CREDAL_KERNEL_THREADS is not an integer");
  }
}

}  // namespace

std::string format_decimal(const Rational& q, int min_places, int max_places) {
  mpz_class scale = 1;
  for (int i = 0; i < max_places; ++i) scale *= 10;
  Rational shifted = q * Rational(scale) + rat(1, 2);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  bool neg = n < 0;
  if (neg) n = -n;
  std::string digits = n.get_str();
  if (static_cast<int>(digits.size()) <= max_places)
    digits.insert(0, max_places + 1 - digits.size(), '0');
  digits.insert(digits.size() - max_places, 1, '.');
  while (static_cast<int>(digits.size() - digits.find('.') - 1) > min_places &&
         digits.back() == '0')
    digits.pop_back();
  return neg ? "-" + digits : digits;
}

void emit_comparison_table(std::ostream& out,
                           const std::vector<std::pair<std::string, ProbInterval>>& rows,
                           const std::optional<Rational>& classical) {
  if (rows.empty()) return;
  std::size_t name_w = std::string("approach").size();
  std::size_t ival_w = std::string("interval").size();
  std::vector<std::string> ivals;
  for (const auto& [name, p] : rows) {
    name_w = std::max(name_w, name.size());
    ivals.push_back(fmt_interval(p));
    ival_w = std::max(ival_w, ivals.back().size());
  }
  out << std::left << std::setw(static_cast<int>(name_w) + 2) << "approach"
      << std::setw(static_cast<int>(ival_w) + 2) << "interval" << std::setw(7) << "width"
      << "contains-classical\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string flag = "-";
    if (classical) flag = rows[i].second.contains_value(*classical) ? "yes" : "no";
    out << std::left << std::setw(static_cast<int>(name_w) + 2) << rows[i].first
        << std::setw(static_cast<int>(ival_w) + 2) << ivals[i] << std::setw(7)
        << format_decimal(rows[i].second.width()) << flag << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string fixtures_dir;

  CLI::App app{"interval and credal probability toolkit"};
  app.require_subcommand(0, 1);
  app.add_option("--fixtures", fixtures_dir, "write the worked-example JSON files to a directory");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--beta-tol", opt.beta_tol, "default CDF tolerance for beta laws")
      ->capture_default_str();
  app.add_option("--grid-depth", opt.grid_depth, "dyadic grid depth for logic checks")
      ->capture_default_str();
  app.add_option("--ifs-depth", opt.ifs_depth, "cylinder depth for the ifs subcommand")
      ->capture_default_str();

  std::vector<CLI::App*> subs;
  for (const char* name : {"eval", "cond", "bayes", "credal", "ci", "logic", "ifs", "markov"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();  // global flags may follow the subcommand
    sub->add_option("-i,--input", opt.input, "path to a JSON payload file");
    sub->add_option("--json", opt.inline_json, "inline JSON payload");
    subs.push_back(sub);
  }
  subs[7]->add_option("--mode", opt.markov_mode, "exact | vertices | refine")
      ->check(CLI::IsMember({"exact", "vertices", "refine"}));
  subs[7]->add_option("--state", opt.state, "seed vertex index for refine");
  subs[7]->add_option("--steps", opt.steps, "climb steps for refine");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    diagnose(err, "usage-error", e.what());
    return 1;
  }

  try {
    thread_cap();
    if (!fixtures_dir.empty()) {
      write_fixtures(fixtures_dir, out);
      return 0;
    }
    if (app.get_subcommands().empty()) {
      out << app.help();
      return 0;
    }
    const std::string name = app.get_subcommands()[0]->get_name();
    Json payload = load_payload(opt);
    if (name == "eval") run_eval(payload, opt, out);
    else if (name == "cond") run_cond(payload, opt, out);
    else if (name == "bayes") run_bayes(payload, opt, out);
    else if (name == "credal") run_credal(payload, opt, out);
    else if (name == "ci") run_ci(payload, opt, out);
    else if (name == "logic") run_logic(payload, opt, out);
    else if (name == "ifs") run_ifs(payload, opt, out);
    else if (name == "markov") run_markov(payload, opt, out);
    return 0;
  } catch (const ParseError& e) {
    diagnose(err, "parse-error", e.what());
    return 1;
  } catch (const Json::exception& e) {
    diagnose(err, "parse-error", e.what());
    return 1;
  } catch (const CredalError& e) {
    diagnose(err, classify(e), e.what());
    return 2;
  }
}

}  // namespace credal::cli
