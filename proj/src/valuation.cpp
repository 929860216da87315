#include "credal/valuation.hpp"

#include <algorithm>
#include <cmath>

#include "credal/errors.hpp"

namespace credal {

namespace {

Rational pow_rat(const Rational& base, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

void check_weights_sum_one(const std::vector<Rational>& w, const char* what) {
  Rational sum(0);
  for (const auto& x : w) {
    if (x < 0) throw RangeViolation(std::string(what) + ": negative weight");
    sum += x;
  }
  if (sum != 1) throw RangeViolation(std::string(what) + ": weights must sum to 1");
}

// Runs the construction: stage k removes a centred open interval of absolute
// length r/3^k from each of the 2^(k-1) surviving intervals.
struct CantorStage {
  std::vector<ClosedIval> survivors;
  std::vector<FatCantorLaw::Atom> atoms;    // endpoint atoms, in position order
  std::vector<OpenIval> removed;            // removed middles, in position order
};

CantorStage run_cantor(const Rational& r, int n) {
  CantorStage st;
  st.survivors = {ClosedIval{Rational(0), Rational(1)}};
  Rational third(1, 3);
  Rational len = r;
  for (int k = 1; k <= n; ++k) {
    len *= third;  // r / 3^k
    std::vector<ClosedIval> next;
    next.reserve(st.survivors.size() * 2);
    for (const auto& iv : st.survivors) {
      Rational mid = (iv.lo + iv.hi) / 2;
      Rational a = mid - len / 2;
      Rational b = mid + len / 2;
      st.removed.push_back({a, b});
      st.atoms.push_back({a, len / 2});
      st.atoms.push_back({b, len / 2});
      next.push_back({iv.lo, a});
      next.push_back({b, iv.hi});
    }
    st.survivors = std::move(next);
  }
  std::sort(st.atoms.begin(), st.atoms.end(),
            [](const auto& x, const auto& y) { return x.pos < y.pos; });
  std::sort(st.removed.begin(), st.removed.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return st;
}

double inc_beta_cf(double a, double b, double x) {
  const int kMaxIter = 500;
  const double kEps = 3e-16, kTiny = 1e-300;
  double qab = a + b, qap = a + 1, qam = a - 1;
  double c = 1, d = 1 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw NonConvergence("incomplete beta continued fraction did not converge");
}

// Mass of the open interval (lo, hi) under a one-dimensional valuation.
Scalar measure_open_interval(const Valuation& v, const Rational& lo, const Rational& hi);
// Mass of the single point {x}.
Scalar point_mass(const Valuation& v, const Rational& x);

Scalar measure_open_interval(const Valuation& v, const Rational& lo, const Rational& hi) {
  if (lo >= hi) return Scalar(Rational(0));
  const ValuationLaw& law = v.law();
  if (std::holds_alternative<LebesgueLaw>(law)) return Scalar(hi - lo);
  if (const auto* pw = std::get_if<PiecewiseDensityLaw>(&law)) {
    Rational mass(0);
    for (std::size_t i = 0; i + 1 < pw->breaks.size(); ++i) {
      Rational a = std::max(lo, pw->breaks[i]);
      Rational b = std::min(hi, pw->breaks[i + 1]);
      if (a < b) mass += pw->weights[i] * (b - a) / (pw->breaks[i + 1] - pw->breaks[i]);
    }
    return Scalar(mass);
  }
  if (const auto* bt = std::get_if<BetaLaw>(&law)) {
    UnitValue upper = regularized_incomplete_beta(bt->alpha, bt->beta, to_double(hi), bt->tol);
    UnitValue lower = regularized_incomplete_beta(bt->alpha, bt->beta, to_double(lo), bt->tol);
    return upper.scalar() - lower.scalar();
  }
  if (const auto* fc = std::get_if<FatCantorLaw>(&law)) {
    Scalar mass(Rational(0));
    // Leaves and atoms are stored in position order; jump to the first one
    // that can meet (lo, hi) instead of scanning the whole construction.
    auto leaf_it =
        std::lower_bound(fc->leaves.begin(), fc->leaves.end(), lo,
                         [](const ClosedIval& leaf, const Rational& x) { return leaf.hi <= x; });
    for (; leaf_it != fc->leaves.end() && leaf_it->lo < hi; ++leaf_it) {
      const auto& leaf = *leaf_it;
      Rational a = std::max(lo, leaf.lo);
      Rational b = std::min(hi, leaf.hi);
      if (a >= b) continue;
      Rational overlap = b - a;
      Rational leaf_len = leaf.hi - leaf.lo;
      if (lo <= leaf.lo && leaf.hi <= hi) {
        mass = mass + Scalar(leaf_len);  // whole interior: aggregate mass is exact
      } else {
        // The cut passes through the leaf; the distribution inside is only
        // known in aggregate, so bound the deviation by the worse side.
        Rational rest = leaf_len - overlap;
        mass = mass + Scalar(overlap, std::max(overlap, rest));
      }
    }
    auto atom_it = std::lower_bound(
        fc->atoms.begin(), fc->atoms.end(), lo,
        [](const FatCantorLaw::Atom& at, const Rational& x) { return at.pos <= x; });
    for (; atom_it != fc->atoms.end() && atom_it->pos < hi; ++atom_it)
      mass = mass + Scalar(atom_it->mass);
    return mass;
  }
  if (const auto* mx = std::get_if<MixtureLaw>(&law)) {
    Scalar mass(Rational(0));
    for (const auto& [w, part] : mx->parts)
      mass = mass + Scalar(w) * measure_open_interval(part, lo, hi);
    return mass;
  }
  throw SpaceMismatch("law is not one-dimensional");
}

Scalar point_mass(const Valuation& v, const Rational& x) {
  const ValuationLaw& law = v.law();
  if (const auto* fc = std::get_if<FatCantorLaw>(&law)) {
    for (const auto& at : fc->atoms)
      if (at.pos == x) return Scalar(at.mass);
    for (const auto& leaf : fc->leaves)
      if (leaf.lo < x && x < leaf.hi) {
        // Deeper endpoint atoms are not enumerated; the largest has mass
        // r/(2*3^(depth+1)).
        return Scalar(Rational(0), fc->r / (2 * pow_rat(Rational(3), fc->depth + 1)));
      }
    return Scalar(Rational(0));
  }
  if (const auto* mx = std::get_if<MixtureLaw>(&law)) {
    Scalar mass(Rational(0));
    for (const auto& [w, part] : mx->parts) mass = mass + Scalar(w) * point_mass(part, x);
    return mass;
  }
  return Scalar(Rational(0));  // atomless laws
}

// Product-law evaluation: enumerate the cells of the grid induced by the box
// endpoints (open pieces and the singleton faces between them) and sum the
// per-axis piece masses of the member cells. Faces matter because a factor
// may carry atoms.
Scalar eval_product(const ProductLaw& law, const OpenSet& o) {
  int dim = o.space().extent;
  std::vector<std::vector<Rational>> cuts(dim);
  for (int k = 0; k < dim; ++k) cuts[k] = {Rational(0), Rational(1)};
  for (const auto& b : o.boxes())
    for (int k = 0; k < dim; ++k) {
      cuts[k].push_back(b[k].lo);
      cuts[k].push_back(b[k].hi);
    }
  for (auto& c : cuts) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::vector<int> piece(dim, 0);
  Scalar total(Rational(0));
  while (true) {
    std::vector<Rational> rep(dim);
    for (int k = 0; k < dim; ++k)
      rep[k] = piece[k] % 2 == 0 ? cuts[k][piece[k] / 2]
                                 : (cuts[k][piece[k] / 2] + cuts[k][piece[k] / 2 + 1]) / 2;
    if (o.contains(rep)) {
      Scalar m(Rational(1));
      for (int k = 0; k < dim; ++k) {
        m = m * (piece[k] % 2 == 0
                     ? point_mass(law.factors[k], cuts[k][piece[k] / 2])
                     : measure_open_interval(law.factors[k], cuts[k][piece[k] / 2],
                                             cuts[k][piece[k] / 2 + 1]));
        if (m.is_exact() && m.val == 0) break;
      }
      total = total + m;
    }
    int k = dim - 1;
    while (k >= 0) {
      if (++piece[k] < 2 * static_cast<int>(cuts[k].size()) - 1) break;
      piece[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return total;
}

}  // namespace

Valuation Valuation::lebesgue(int dim) {
  return Valuation(SpaceDescriptor::cube(dim), LebesgueLaw{});
}

Valuation Valuation::piecewise(std::vector<Rational> breaks, std::vector<Rational> weights) {
  if (breaks.size() < 2 || breaks.front() != 0 || breaks.back() != 1)
    throw RangeViolation("piecewise breaks must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i] < breaks[i + 1]))
      throw OrderViolation("piecewise breaks must be strictly increasing");
  if (weights.size() + 1 != breaks.size())
    throw RangeViolation("piecewise needs one weight per segment");
  check_weights_sum_one(weights, "piecewise");
  return Valuation(SpaceDescriptor::cube(1),
                   PiecewiseDensityLaw{std::move(breaks), std::move(weights)});
}

Valuation Valuation::beta(double alpha, double beta, double tol) {
  if (!(alpha > 0) || !(beta > 0)) throw RangeViolation("beta parameters must be positive");
  if (!(tol > 0)) throw RangeViolation("beta tolerance must be positive");
  return Valuation(SpaceDescriptor::cube(1), BetaLaw{alpha, beta, tol});
}

Valuation Valuation::fat_cantor(const Rational& r, int depth) {
  if (!(r > 0 && r < 1)) throw RangeViolation("fat cantor parameter must be in (0,1)");
  if (depth < 1) throw RangeViolation("fat cantor depth must be positive");
  CantorStage st = run_cantor(r, depth);
  FatCantorLaw law;
  law.r = r;
  law.depth = depth;
  law.leaves = std::move(st.survivors);
  law.atoms = std::move(st.atoms);
  return Valuation(SpaceDescriptor::cube(1), std::move(law));
}

Valuation Valuation::discrete(std::vector<Rational> p) {
  if (p.empty()) throw RangeViolation("discrete law needs at least one point");
  check_weights_sum_one(p, "discrete");
  SpaceDescriptor sp = SpaceDescriptor::discrete(static_cast<int>(p.size()));
  return Valuation(sp, DiscreteLaw{std::move(p)});
}

Valuation Valuation::mixture(std::vector<std::pair<Rational, Valuation>> parts) {
  if (parts.empty()) throw RangeViolation("mixture needs at least one part");
  std::vector<Rational> w;
  for (const auto& [wi, part] : parts) {
    w.push_back(wi);
    require_same_space(parts.front().second.space(), part.space(), "mixture");
  }
  check_weights_sum_one(w, "mixture");
  SpaceDescriptor sp = parts.front().second.space();
  return Valuation(sp, MixtureLaw{std::move(parts)});
}

Valuation Valuation::product(std::vector<Valuation> factors) {
  if (factors.empty()) throw RangeViolation("product needs at least one factor");
  for (const auto& f : factors)
    if (!(f.space() == SpaceDescriptor::cube(1)))
      throw SpaceMismatch("product factors must be one-dimensional");
  SpaceDescriptor sp = SpaceDescriptor::cube(static_cast<int>(factors.size()));
  return Valuation(sp, ProductLaw{std::move(factors)});
}

EvalResult eval_open(const Valuation& sigma, const OpenSet& o) {
  require_same_space(sigma.space(), o.space(), "eval_open");
  const ValuationLaw& law = sigma.law();

  if (const auto* d = std::get_if<DiscreteLaw>(&law)) {
    Rational mass(0);
    for (int pt : o.points()) mass += d->p[pt];
    return {UnitValue::clamped(Scalar(mass))};
  }
  if (const auto* mx = std::get_if<MixtureLaw>(&law)) {
    Scalar mass(Rational(0));
    for (const auto& [w, part] : mx->parts)
      mass = mass + Scalar(w) * eval_open(part, o).value.scalar();
    return {UnitValue::clamped(mass)};
  }
  if (const auto* pr = std::get_if<ProductLaw>(&law)) {
    return {UnitValue::clamped(eval_product(*pr, o))};
  }
  if (std::holds_alternative<LebesgueLaw>(law) && sigma.space().extent > 1) {
    Rational vol(0);
    for (const auto& cell : disjoint_full_cells(o)) {
      Rational v(1);
      for (const auto& iv : cell) v *= iv.hi - iv.lo;
      vol += v;
    }
    return {UnitValue::clamped(Scalar(vol))};
  }
  // One-dimensional laws: the normalized box list is already disjoint, and
  // shared endpoints of touching intervals are correctly excluded by the
  // strict inequalities in the interval measure.
  Scalar mass(Rational(0));
  for (const auto& b : o.boxes()) mass = mass + measure_open_interval(sigma, b[0].lo, b[0].hi);
  return {UnitValue::clamped(mass)};
}

UnitValue regularized_incomplete_beta(double alpha, double beta, double x, double tol) {
  if (!(alpha > 0) || !(beta > 0)) throw RangeViolation("beta parameters must be positive");
  if (x < 0 || x > 1) throw RangeViolation("beta argument outside [0,1]");
  if (x == 0) return UnitValue::zero();
  if (x == 1) return UnitValue::one();
  double front = std::exp(std::lgamma(alpha + beta) - std::lgamma(alpha) - std::lgamma(beta) +
                          alpha * std::log(x) + beta * std::log1p(-x));
  double val;
  if (x < (alpha + 1) / (alpha + beta + 2)) {
    val = front * inc_beta_cf(alpha, beta, x) / alpha;
  } else {
    val = 1.0 - front * inc_beta_cf(beta, alpha, 1 - x) / beta;
  }
  return UnitValue::clamped(Scalar(rational_from_double(val), rational_from_double(tol)));
}

UnitValue fat_cantor_open_layer(const Rational& r, int n) {
  if (!(r > 0 && r < 1)) throw RangeViolation("fat cantor parameter must be in (0,1)");
  if (n < 0) throw RangeViolation("layer index must be nonnegative");
  return UnitValue::exact(1 - r + r * pow_rat(Rational(2, 3), n));
}

OpenSet fat_cantor_layer_open_set(const Rational& r, int n) {
  if (!(r > 0 && r < 1)) throw RangeViolation("fat cantor parameter must be in (0,1)");
  CantorStage st = run_cantor(r, n);
  std::vector<Box> boxes;
  for (const auto& iv : st.survivors) boxes.push_back({OpenIval{iv.lo, iv.hi}});
  return OpenSet::from_boxes(SpaceDescriptor::cube(1), std::move(boxes));
}

OpenSet fat_cantor_removed_open_set(const Rational& r, int n) {
  if (!(r > 0 && r < 1)) throw RangeViolation("fat cantor parameter must be in (0,1)");
  CantorStage st = run_cantor(r, n);
  std::vector<Box> boxes;
  for (const auto& iv : st.removed) boxes.push_back({iv});
  return OpenSet::from_boxes(SpaceDescriptor::cube(1), std::move(boxes));
}

bool check_modularity(const Valuation& sigma, const OpenSet& u, const OpenSet& v) {
  require_same_space(u.space(), v.space(), "check_modularity");
  Scalar lhs = eval_open(sigma, u).value.scalar() + eval_open(sigma, v).value.scalar();
  Scalar rhs = eval_open(sigma, os_union(u, v)).value.scalar() +
               eval_open(sigma, os_intersect(u, v)).value.scalar();
  return approx_equal(lhs, rhs);
}

namespace {

enum class Tri { True, False, Unknown };

Tri threshold_passes(const Rational& p, const Scalar& mass) {
  Cmp c = compare(Scalar(p), mass);
  if (c == Cmp::Less) return Tri::True;
  if (c == Cmp::Unordered) return Tri::Unknown;
  return Tri::False;
}

// Shrinks every box toward its centre by the given fraction of its extent.
OpenSet shrink_open(const OpenSet& v, const Rational& frac) {
  std::vector<Box> boxes;
  for (const auto& b : v.boxes()) {
    Box nb(b.size());
    bool ok = true;
    for (std::size_t k = 0; k < b.size() && ok; ++k) {
      Rational margin = (b[k].hi - b[k].lo) * frac;
      nb[k] = {b[k].lo + margin, b[k].hi - margin};
      ok = nb[k].lo < nb[k].hi;
    }
    if (ok) boxes.push_back(std::move(nb));
  }
  return OpenSet::from_boxes(v.space(), std::move(boxes));
}

}  // namespace

GAxiomReport check_G_axioms(const Valuation& sigma, const std::vector<OpenSet>& basis_sample,
                            const std::vector<Rational>& threshold_grid) {
  GAxiomReport rep;
  auto note = [&](int axiom, const std::string& detail) {
    rep.violations.push_back("axiom " + std::to_string(axiom) + ": " + detail);
  };
  OpenSet whole = OpenSet::full(sigma.space());
  Scalar full_mass = eval_open(sigma, whole).value.scalar();
  Scalar empty_mass = eval_open(sigma, OpenSet::empty(sigma.space())).value.scalar();

  for (const auto& p : threshold_grid) {
    ++rep.instances_checked;
    Tri t = threshold_passes(p, full_mass);
    if (t == Tri::False) note(1, "full space rejected threshold " + rational_to_string(p));
    if (t == Tri::Unknown) ++rep.indeterminate;
    ++rep.instances_checked;
    t = threshold_passes(p, empty_mass);
    if (t == Tri::True) note(2, "empty set passed threshold " + rational_to_string(p));
    if (t == Tri::Unknown) ++rep.indeterminate;
  }

  std::vector<Scalar> mass;
  mass.reserve(basis_sample.size());
  for (const auto& v : basis_sample) mass.push_back(eval_open(sigma, v).value.scalar());

  // Monotonicity in both arguments.
  for (std::size_t i = 0; i < basis_sample.size(); ++i)
    for (std::size_t j = 0; j < basis_sample.size(); ++j) {
      if (i == j || !os_subset(basis_sample[i], basis_sample[j])) continue;
      for (const auto& p : threshold_grid)
        for (const auto& q : threshold_grid) {
          if (q > p) continue;  // need p >= p'
          ++rep.instances_checked;
          Tri lhs = threshold_passes(p, mass[i]);
          Tri rhs = threshold_passes(q, mass[j]);
          if (lhs == Tri::True && rhs == Tri::False)
            note(3, "set " + std::to_string(i) + " at " + rational_to_string(p) +
                        " but superset " + std::to_string(j) + " fails at " +
                        rational_to_string(q));
          else if (lhs == Tri::Unknown || (lhs == Tri::True && rhs == Tri::Unknown))
            ++rep.indeterminate;
        }
    }

  // Interpolation: a passing pair admits a way-below refinement passing a
  // strictly higher threshold.
  for (std::size_t i = 0; i < basis_sample.size(); ++i) {
    if (basis_sample[i].is_empty() || !basis_sample[i].space().is_cube()) continue;
    for (const auto& p : threshold_grid) {
      if (threshold_passes(p, mass[i]) != Tri::True) continue;
      ++rep.instances_checked;
      bool found = false;
      Rational frac(1, 8);
      for (int step = 0; step < 40 && !found; ++step, frac /= 2) {
        OpenSet inner = shrink_open(basis_sample[i], frac);
        if (!os_way_below(inner, basis_sample[i])) continue;
        Scalar im = eval_open(sigma, inner).value.scalar();
        // Need a rational p' with p < p' < sigma(inner).
        Rational pprime = (p + (im.val - im.err)) / 2;
        found = pprime > p && threshold_passes(pprime, im) == Tri::True;
      }
      if (!found)
        note(4, "no way-below interpolant for set " + std::to_string(i) + " above " +
                    rational_to_string(p));
    }
  }

  // Modular exchange in both directions.
  for (std::size_t i = 0; i < basis_sample.size(); ++i)
    for (std::size_t j = i + 1; j < basis_sample.size(); ++j) {
      Scalar mu = eval_open(sigma, os_union(basis_sample[i], basis_sample[j])).value.scalar();
      Scalar mi = eval_open(sigma, os_intersect(basis_sample[i], basis_sample[j])).value.scalar();
      for (const auto& p : threshold_grid)
        for (const auto& q : threshold_grid)
          for (const auto& pp : threshold_grid) {
            Rational qq = p + q - pp;
            if (!(qq > 0 && qq < 1)) continue;
            ++rep.instances_checked;
            // p < s(u) and q < s(v) force p' < s(union) or q' < s(intersection).
            Tri a = threshold_passes(p, mass[i]);
            Tri b = threshold_passes(q, mass[j]);
            Tri c = threshold_passes(pp, mu);
            Tri d = threshold_passes(qq, mi);
            if (a == Tri::True && b == Tri::True && c == Tri::False && d == Tri::False)
              note(5, "sets " + std::to_string(i) + "," + std::to_string(j) + " at p=" +
                          rational_to_string(p) + " q=" + rational_to_string(q));
            else if ((a == Tri::Unknown || b == Tri::Unknown || c == Tri::Unknown ||
                      d == Tri::Unknown))
              ++rep.indeterminate;
            ++rep.instances_checked;
            // Converse direction with union/intersection on the left.
            Tri a2 = threshold_passes(p, mu);
            Tri b2 = threshold_passes(q, mi);
            Tri c2 = threshold_passes(pp, mass[i]);
            Tri d2 = threshold_passes(qq, mass[j]);
            if (a2 == Tri::True && b2 == Tri::True && c2 == Tri::False && d2 == Tri::False)
              note(6, "sets " + std::to_string(i) + "," + std::to_string(j) + " at p=" +
                          rational_to_string(p) + " q=" + rational_to_string(q));
            else if ((a2 == Tri::Unknown || b2 == Tri::Unknown || c2 == Tri::Unknown ||
                      d2 == Tri::Unknown))
              ++rep.indeterminate;
          }
    }

  return rep;
}

}  // namespace credal
