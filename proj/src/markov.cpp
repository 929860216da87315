#include "credal/markov.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace credal {

namespace {

void check_stochastic(const std::vector<std::vector<Rational>>& t) {
  std::size_t n = t.size();
  if (n < 2) throw RangeViolation("a chain needs at least 2 states");
  for (const auto& row : t) {
    if (row.size() != n) throw RangeViolation("transition matrix is not square");
    Rational sum(0);
    for (const auto& x : row) {
      if (x < 0 || x > 1) throw RangeViolation("transition probability outside [0,1]");
      sum += x;
    }
    if (sum != 1) throw RangeViolation("transition row does not sum to 1");
  }
}

std::vector<int> bfs_order(const std::vector<std::vector<Rational>>& t, bool forward) {
  int n = static_cast<int>(t.size());
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < n; ++v) {
      bool edge = forward ? t[u][v] > 0 : t[v][u] > 0;
      if (edge && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

void check_ergodic(const std::vector<std::vector<Rational>>& t) {
  int n = static_cast<int>(t.size());
  auto fwd = bfs_order(t, true);
  auto bwd = bfs_order(t, false);
  for (int v = 0; v < n; ++v)
    if (fwd[v] < 0 || bwd[v] < 0) throw Reducible("positive-entry digraph is not strongly connected");
  // Period = gcd over edges of level(u) + 1 - level(v) in a BFS layering.
  long g = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (t[u][v] > 0) g = std::gcd(g, static_cast<long>(fwd[u]) + 1 - fwd[v]);
  if (std::abs(g) != 1) throw Periodic("chain period exceeds 1");
}

// Exact rational Gaussian elimination with partial (first nonzero) pivoting.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DegenerateChain("stationary system is singular");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int r = n - 1; r >= 0; --r) {
    Rational acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  return x;
}

StationaryBounds bounds_over(const std::vector<std::vector<Rational>>& values, int n,
                             StationaryBounds::Provenance prov,
                             std::vector<std::string> warnings) {
  if (values.empty()) throw AllVerticesDegenerate("no usable vertex matrix");
  StationaryBounds out;
  out.provenance = prov;
  out.warnings = std::move(warnings);
  for (int k = 0; k < n; ++k) {
    Rational lo = values[0][k], hi = values[0][k];
    for (const auto& v : values) {
      if (v[k] < lo) lo = v[k];
      if (v[k] > hi) hi = v[k];
    }
    out.per_state.push_back(make_prob_interval(lo, hi));
  }
  return out;
}

// All products of row-vertex choices, as index tuples.
struct RowVertexProduct {
  std::vector<std::vector<std::vector<Rational>>> per_row;

  explicit RowVertexProduct(const IntervalTransitionMatrix& itm) {
    for (const auto& row : itm.rows()) per_row.push_back(row_vertices(row));
  }

  std::vector<std::vector<Rational>> matrix(const std::vector<int>& pick) const {
    std::vector<std::vector<Rational>> t;
    for (std::size_t r = 0; r < per_row.size(); ++r) t.push_back(per_row[r][pick[r]]);
    return t;
  }
};

std::optional<std::vector<Rational>> try_stationary(const std::vector<std::vector<Rational>>& t,
                                                    std::vector<std::string>& warnings,
                                                    const std::string& label) {
  try {
    return stationary(t);
  } catch (const Reducible&) {
    warnings.push_back(label + ": reducible vertex matrix skipped");
  } catch (const Periodic&) {
    warnings.push_back(label + ": periodic vertex matrix skipped");
  }
  return std::nullopt;
}

}  // namespace

IntervalTransitionMatrix IntervalTransitionMatrix::make(
    std::vector<std::vector<WeightBound>> rows) {
  std::size_t n = rows.size();
  if (n < 2) throw RangeViolation("a chain needs at least 2 states");
  for (const auto& row : rows) {
    if (row.size() != n) throw RangeViolation("interval matrix is not square");
    Rational lo_sum(0), hi_sum(0);
    for (const auto& e : row) {
      if (e.lo < 0 || e.hi > 1 || e.lo > e.hi)
        throw RangeViolation("transition interval outside [0,1]");
      lo_sum += e.lo;
      hi_sum += e.hi;
    }
    if (lo_sum > 1 || hi_sum < 1) throw EmptyRow("row box misses the probability simplex");
  }
  return IntervalTransitionMatrix(std::move(rows));
}

std::vector<std::vector<Rational>> row_vertices(const std::vector<WeightBound>& row) {
  try {
    return admissible_vertices(row);
  } catch (const EmptyAdmissibleSet&) {
    throw EmptyRow("row box misses the probability simplex");
  }
}

std::vector<Rational> stationary(const std::vector<std::vector<Rational>>& t) {
  check_stochastic(t);
  check_ergodic(t);
  int n = static_cast<int>(t.size());
  // pi (T - I) = 0 on the first n-1 columns, plus the normalization row.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<Rational> b(n, Rational(0));
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < n; ++i) a[j][i] = t[i][j] - Rational(i == j ? 1 : 0);
  for (int i = 0; i < n; ++i) a[n - 1][i] = 1;
  b[n - 1] = 1;
  auto pi = solve_linear(std::move(a), std::move(b));
  for (const auto& x : pi)
    if (x < 0 || x > 1) throw DegenerateChain("stationary solution leaves [0,1]");
  return pi;
}

StationaryBounds stationary_bounds_vertices(const IntervalTransitionMatrix& itm) {
  RowVertexProduct prod(itm);
  int n = itm.size();
  std::vector<int> pick(n, 0);
  std::vector<std::vector<Rational>> values;
  std::vector<std::string> warnings;
  while (true) {
    std::string label = "vertex";
    for (int i : pick) label += " " + std::to_string(i);
    if (auto pi = try_stationary(prod.matrix(pick), warnings, label))
      values.push_back(std::move(*pi));
    int r = 0;
    while (r < n && ++pick[r] == static_cast<int>(prod.per_row[r].size())) pick[r++] = 0;
    if (r == n) break;
  }
  return bounds_over(values, n, StationaryBounds::Provenance::VertexInner, std::move(warnings));
}

StationaryBounds two_state_exact(const IntervalTransitionMatrix& itm) {
  if (itm.size() != 2) throw RangeViolation("exact solution is for two states");
  const WeightBound& t11 = itm.rows()[0][0];
  const WeightBound& t21 = itm.rows()[1][0];
  // pi_1 = t21 / (1 - t11 + t21); the denominator vanishes only at
  // t11 = 1, t21 = 0, where the chain degenerates.
  if (t11.hi == 1 && t21.lo == 0)
    throw DegenerateChain("an admissible matrix has an absorbing state");
  auto value = [](const Rational& a, const Rational& c) -> Rational { return c / (1 - a + c); };
  Rational lo = value(t11.lo, t21.lo);
  Rational hi = value(t11.hi, t21.hi);
  StationaryBounds out;
  out.provenance = StationaryBounds::Provenance::Exact;
  out.per_state.push_back(make_prob_interval(lo, hi));
  out.per_state.push_back(make_prob_interval(Rational(1) - hi, Rational(1) - lo));
  return out;
}

StationaryBounds refine_bounds_local(const IntervalTransitionMatrix& itm, int start, int steps) {
  RowVertexProduct prod(itm);
  int n = itm.size();
  std::vector<std::string> warnings;
  std::vector<std::vector<Rational>> values;

  std::vector<int> seed(n);
  for (int r = 0; r < n; ++r)
    seed[r] = start % static_cast<int>(prod.per_row[r].size());
  auto eval = [&](const std::vector<int>& pick) {
    std::string label = "pick";
    for (int i : pick) label += " " + std::to_string(i);
    auto pi = try_stationary(prod.matrix(pick), warnings, label);
    if (pi) values.push_back(*pi);
    return pi;
  };
  auto seed_pi = eval(seed);
  if (!seed_pi) throw AllVerticesDegenerate("seed vertex matrix is unusable");

  // One climb per state and direction; each step swaps a single row's vertex
  // and keeps the move iff the objective improves.
  for (int k = 0; k < n; ++k) {
    for (int dir = 0; dir < 2; ++dir) {
      auto pick = seed;
      Rational best = (*seed_pi)[k];
      for (int step = 0; step < steps; ++step) {
        bool improved = false;
        for (int r = 0; r < n && !improved; ++r) {
          int options = static_cast<int>(prod.per_row[r].size());
          for (int c = 0; c < options && !improved; ++c) {
            if (c == pick[r]) continue;
            auto cand = pick;
            cand[r] = c;
            auto pi = eval(cand);
            if (pi && (dir == 0 ? (*pi)[k] < best : (*pi)[k] > best)) {
              best = (*pi)[k];
              pick = cand;
              improved = true;
            }
          }
        }
        if (!improved) break;
      }
    }
  }
  return bounds_over(values, n, StationaryBounds::Provenance::Refined, std::move(warnings));
}

}  // namespace credal
