#include "credal/open_set.hpp"

#include <algorithm>
#include <numeric>

#include "credal/errors.hpp"

namespace credal {

namespace {

// Per-axis sorted cut points, always containing 0 and 1. The induced pieces
// alternate singleton {cut[j]} (piece 2j) and open interval (cut[j], cut[j+1])
// (piece 2j+1); every set whose box endpoints are cuts is a union of cells.
using Grid = std::vector<std::vector<Rational>>;

Grid fresh_grid(int dim) {
  Grid g(dim);
  for (auto& cuts : g) cuts = {Rational(0), Rational(1)};
  return g;
}

void grid_add_open(Grid& g, const std::vector<Box>& boxes) {
  for (const auto& b : boxes)
    for (std::size_t k = 0; k < b.size(); ++k) {
      g[k].push_back(b[k].lo);
      g[k].push_back(b[k].hi);
    }
}

void grid_add_closed(Grid& g, const std::vector<ClosedBox>& boxes) {
  for (const auto& b : boxes)
    for (std::size_t k = 0; k < b.size(); ++k) {
      g[k].push_back(b[k].lo);
      g[k].push_back(b[k].hi);
    }
}

void grid_finish(Grid& g) {
  for (auto& cuts : g) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  }
}

int piece_count(const Grid& g, int axis) { return 2 * static_cast<int>(g[axis].size()) - 1; }

// Representative point of a piece: the cut for singletons, the midpoint for
// open intervals.
Rational piece_rep(const Grid& g, int axis, int piece) {
  if (piece % 2 == 0) return g[axis][piece / 2];
  return (g[axis][piece / 2] + g[axis][piece / 2 + 1]) / 2;
}

long long cell_total(const Grid& g) {
  long long n = 1;
  for (std::size_t k = 0; k < g.size(); ++k) n *= piece_count(g, static_cast<int>(k));
  return n;
}

std::vector<long long> cell_strides(const Grid& g) {
  std::vector<long long> s(g.size());
  long long acc = 1;
  for (int k = static_cast<int>(g.size()) - 1; k >= 0; --k) {
    s[k] = acc;
    acc *= piece_count(g, k);
  }
  return s;
}

template <class Fn>
void for_each_cell(const Grid& g, Fn&& fn) {
  int dim = static_cast<int>(g.size());
  std::vector<int> p(dim, 0);
  while (true) {
    fn(p);
    int k = dim - 1;
    while (k >= 0) {
      if (++p[k] < piece_count(g, k)) break;
      p[k] = 0;
      --k;
    }
    if (k < 0) return;
  }
}

long long cell_id(const std::vector<long long>& strides, const std::vector<int>& p) {
  long long id = 0;
  for (std::size_t k = 0; k < p.size(); ++k) id += strides[k] * p[k];
  return id;
}

bool point_in_boxes(const std::vector<Box>& boxes, const std::vector<Rational>& pt) {
  for (const auto& b : boxes) {
    bool in = true;
    for (std::size_t k = 0; k < b.size() && in; ++k)
      in = b[k].lo < pt[k] && pt[k] < b[k].hi;
    if (in) return true;
  }
  return false;
}

bool point_in_closed_boxes(const std::vector<ClosedBox>& boxes, const std::vector<Rational>& pt) {
  for (const auto& b : boxes) {
    bool in = true;
    for (std::size_t k = 0; k < b.size() && in; ++k)
      in = b[k].lo <= pt[k] && pt[k] <= b[k].hi;
    if (in) return true;
  }
  return false;
}

std::vector<Rational> cell_rep(const Grid& g, const std::vector<int>& p) {
  std::vector<Rational> pt(g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    pt[k] = piece_rep(g, static_cast<int>(k), p[k]);
  return pt;
}

// Membership array over all cells of the grid.
std::vector<char> member_cells_open(const Grid& g, const std::vector<Box>& boxes) {
  std::vector<char> m(cell_total(g), 0);
  auto strides = cell_strides(g);
  for_each_cell(g, [&](const std::vector<int>& p) {
    m[cell_id(strides, p)] = point_in_boxes(boxes, cell_rep(g, p)) ? 1 : 0;
  });
  return m;
}

std::vector<char> member_cells_closed(const Grid& g, const std::vector<ClosedBox>& boxes) {
  std::vector<char> m(cell_total(g), 0);
  auto strides = cell_strides(g);
  for_each_cell(g, [&](const std::vector<int>& p) {
    m[cell_id(strides, p)] = point_in_closed_boxes(boxes, cell_rep(g, p)) ? 1 : 0;
  });
  return m;
}

// Cells of the topological closure of the member set: a cell lies in the
// closure iff some member cell's closure contains it. Per axis, the closure
// of open piece p covers pieces p-1, p, p+1; singletons cover only themselves.
std::vector<char> closure_cells(const Grid& g, const std::vector<char>& member) {
  std::vector<char> cl(member.size(), 0);
  auto strides = cell_strides(g);
  int dim = static_cast<int>(g.size());
  for_each_cell(g, [&](const std::vector<int>& p) {
    long long id = cell_id(strides, p);
    if (cl[id]) return;
    // Enumerate member cells whose closure contains this cell.
    std::vector<std::vector<int>> choices(dim);
    for (int k = 0; k < dim; ++k) {
      if (p[k] % 2 == 1) {
        choices[k] = {p[k]};
      } else {
        choices[k].push_back(p[k]);
        if (p[k] - 1 >= 0) choices[k].push_back(p[k] - 1);
        if (p[k] + 1 < piece_count(g, k)) choices[k].push_back(p[k] + 1);
      }
    }
    std::vector<int> idx(dim, 0), q(dim);
    while (true) {
      for (int k = 0; k < dim; ++k) q[k] = choices[k][idx[k]];
      if (member[cell_id(strides, q)]) {
        cl[id] = 1;
        return;
      }
      int k = dim - 1;
      while (k >= 0) {
        if (++idx[k] < static_cast<int>(choices[k].size())) break;
        idx[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
  });
  return cl;
}

ClosedBox cell_closure_box(const Grid& g, const std::vector<int>& p) {
  ClosedBox b(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (p[k] % 2 == 0) {
      b[k] = {g[k][p[k] / 2], g[k][p[k] / 2]};
    } else {
      b[k] = {g[k][p[k] / 2], g[k][p[k] / 2 + 1]};
    }
  }
  return b;
}

bool closed_box_contains(const ClosedBox& outer, const ClosedBox& inner) {
  for (std::size_t k = 0; k < outer.size(); ++k)
    if (!(outer[k].lo <= inner[k].lo && inner[k].hi <= outer[k].hi)) return false;
  return true;
}

bool closed_box_less(const ClosedBox& a, const ClosedBox& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].lo != b[k].lo) return a[k].lo < b[k].lo;
    if (a[k].hi != b[k].hi) return a[k].hi < b[k].hi;
  }
  return false;
}

bool open_box_less(const Box& a, const Box& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].lo != b[k].lo) return a[k].lo < b[k].lo;
    if (a[k].hi != b[k].hi) return a[k].hi < b[k].hi;
  }
  return false;
}

bool open_box_contains(const Box& outer, const Box& inner) {
  for (std::size_t k = 0; k < outer.size(); ++k)
    if (!(outer[k].lo <= inner[k].lo && inner[k].hi <= outer[k].hi)) return false;
  return true;
}

std::vector<ClosedBox> normalize_closed(int dim, std::vector<ClosedBox> boxes) {
  if (dim == 1) {
    std::sort(boxes.begin(), boxes.end(), closed_box_less);
    std::vector<ClosedBox> out;
    for (auto& b : boxes) {
      if (!out.empty() && b[0].lo <= out.back()[0].hi) {
        out.back()[0].hi = std::max(out.back()[0].hi, b[0].hi);
      } else {
        out.push_back(b);
      }
    }
    return out;
  }
  std::vector<ClosedBox> out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < boxes.size() && !covered; ++j)
      covered = i != j && closed_box_contains(boxes[j], boxes[i]) &&
                !(closed_box_contains(boxes[i], boxes[j]) && j > i);
    if (!covered) out.push_back(boxes[i]);
  }
  std::sort(out.begin(), out.end(), closed_box_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Box> normalize_open(int dim, std::vector<Box> boxes) {
  if (dim == 1) {
    std::sort(boxes.begin(), boxes.end(), open_box_less);
    std::vector<Box> out;
    for (auto& b : boxes) {
      // Merge strict overlaps only: touching intervals omit the shared point.
      if (!out.empty() && b[0].lo < out.back()[0].hi) {
        out.back()[0].hi = std::max(out.back()[0].hi, b[0].hi);
      } else {
        out.push_back(b);
      }
    }
    return out;
  }
  std::vector<Box> out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < boxes.size() && !covered; ++j)
      covered = i != j && open_box_contains(boxes[j], boxes[i]) &&
                !(open_box_contains(boxes[i], boxes[j]) && j > i);
    if (!covered) out.push_back(boxes[i]);
  }
  std::sort(out.begin(), out.end(), open_box_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Greedy extraction of open boxes covering a cell-membership set that is
// known to be open (every member cell is contained in a member open box).
std::vector<Box> extract_open_boxes(const Grid& g, const std::vector<char>& member) {
  int dim = static_cast<int>(g.size());
  auto strides = cell_strides(g);
  std::vector<Box> out;

  auto range_all_member = [&](std::vector<int> lo, std::vector<int> hi) {
    std::vector<int> p = lo;
    while (true) {
      if (!member[cell_id(strides, p)]) return false;
      int k = dim - 1;
      while (k >= 0) {
        if (++p[k] <= hi[k]) break;
        p[k] = lo[k];
        --k;
      }
      if (k < 0) return true;
    }
  };

  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);

  for_each_cell(g, [&](const std::vector<int>& cell) {
    bool full_dim = true;
    for (int k = 0; k < dim; ++k) full_dim = full_dim && cell[k] % 2 == 1;
    if (!full_dim || !member[cell_id(strides, cell)]) return;
    std::vector<int> perm = order;
    do {
      std::vector<int> lo = cell, hi = cell;
      for (int k : perm) {
        while (hi[k] + 2 < piece_count(g, k)) {
          auto lo2 = lo, hi2 = hi;
          lo2[k] = hi[k] + 1;
          hi2[k] = hi[k] + 2;
          if (!range_all_member(lo2, hi2)) break;
          hi[k] += 2;
        }
        while (lo[k] - 2 >= 0) {
          auto lo2 = lo, hi2 = hi;
          lo2[k] = lo[k] - 2;
          hi2[k] = lo[k] - 1;
          if (!range_all_member(lo2, hi2)) break;
          lo[k] -= 2;
        }
      }
      Box b(dim);
      for (int k = 0; k < dim; ++k) b[k] = {g[k][(lo[k] - 1) / 2], g[k][(hi[k] + 1) / 2]};
      out.push_back(std::move(b));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });

  return normalize_open(dim, std::move(out));
}

}  // namespace

// ---------------------------------------------------------------- OpenSet

OpenSet OpenSet::empty(const SpaceDescriptor& space) {
  OpenSet o;
  o.space_ = space;
  return o;
}

OpenSet OpenSet::full(const SpaceDescriptor& space) {
  OpenSet o;
  o.space_ = space;
  if (space.is_cube()) {
    o.boxes_.push_back(Box(space.extent, OpenIval{Rational(0), Rational(1)}));
  } else {
    o.points_.resize(space.extent);
    std::iota(o.points_.begin(), o.points_.end(), 0);
  }
  return o;
}

OpenSet OpenSet::from_boxes(const SpaceDescriptor& space, std::vector<Box> boxes) {
  if (!space.is_cube()) throw SpaceMismatch("boxes require a cube space");
  std::vector<Box> keep;
  for (auto& b : boxes) {
    if (static_cast<int>(b.size()) != space.extent)
      throw SpaceMismatch("box dimension does not match space");
    bool degenerate = false;
    for (const auto& iv : b) {
      if (iv.lo < 0 || iv.hi > 1) throw RangeViolation("box outside [0,1]");
      if (iv.lo > iv.hi) throw OrderViolation("box interval endpoints out of order");
      degenerate = degenerate || iv.lo == iv.hi;
    }
    if (!degenerate) keep.push_back(std::move(b));
  }
  OpenSet o;
  o.space_ = space;
  o.boxes_ = normalize_open(space.extent, std::move(keep));
  return o;
}

OpenSet OpenSet::interval(const Rational& lo, const Rational& hi) {
  return from_boxes(SpaceDescriptor::cube(1), {Box{OpenIval{lo, hi}}});
}

OpenSet OpenSet::from_points(const SpaceDescriptor& space, std::vector<int> points) {
  if (!space.is_discrete()) throw SpaceMismatch("points require a discrete space");
  for (int p : points)
    if (p < 0 || p >= space.extent) throw RangeViolation("point outside the discrete space");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  OpenSet o;
  o.space_ = space;
  o.points_ = std::move(points);
  return o;
}

bool OpenSet::is_empty() const { return boxes_.empty() && points_.empty(); }

bool OpenSet::contains(const std::vector<Rational>& pt) const {
  return point_in_boxes(boxes_, pt);
}

bool OpenSet::contains(int point) const {
  return std::binary_search(points_.begin(), points_.end(), point);
}

bool OpenSet::operator==(const OpenSet& o) const {
  if (!(space_ == o.space_)) return false;
  if (space_.is_discrete()) return points_ == o.points_;
  return os_subset(*this, o) && os_subset(o, *this);
}

// --------------------------------------------------------------- ClosedSet

ClosedSet ClosedSet::empty(const SpaceDescriptor& space) {
  ClosedSet c;
  c.space_ = space;
  return c;
}

ClosedSet ClosedSet::full(const SpaceDescriptor& space) {
  ClosedSet c;
  c.space_ = space;
  if (space.is_cube()) {
    c.boxes_.push_back(ClosedBox(space.extent, ClosedIval{Rational(0), Rational(1)}));
  } else {
    c.points_.resize(space.extent);
    std::iota(c.points_.begin(), c.points_.end(), 0);
  }
  return c;
}

ClosedSet ClosedSet::from_boxes(const SpaceDescriptor& space, std::vector<ClosedBox> boxes) {
  if (!space.is_cube()) throw SpaceMismatch("closed boxes require a cube space");
  for (const auto& b : boxes) {
    if (static_cast<int>(b.size()) != space.extent)
      throw SpaceMismatch("closed box dimension does not match space");
    for (const auto& iv : b) {
      if (iv.lo < 0 || iv.hi > 1) throw RangeViolation("closed box outside [0,1]");
      if (iv.lo > iv.hi) throw OrderViolation("closed box endpoints out of order");
    }
  }
  ClosedSet c;
  c.space_ = space;
  c.boxes_ = normalize_closed(space.extent, std::move(boxes));
  return c;
}

ClosedSet ClosedSet::point(const Rational& x) {
  return from_boxes(SpaceDescriptor::cube(1), {ClosedBox{ClosedIval{x, x}}});
}

ClosedSet ClosedSet::interval(const Rational& lo, const Rational& hi) {
  return from_boxes(SpaceDescriptor::cube(1), {ClosedBox{ClosedIval{lo, hi}}});
}

ClosedSet ClosedSet::from_points(const SpaceDescriptor& space, std::vector<int> points) {
  if (!space.is_discrete()) throw SpaceMismatch("points require a discrete space");
  for (int p : points)
    if (p < 0 || p >= space.extent) throw RangeViolation("point outside the discrete space");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  ClosedSet c;
  c.space_ = space;
  c.points_ = std::move(points);
  return c;
}

bool ClosedSet::is_empty() const { return boxes_.empty() && points_.empty(); }

bool ClosedSet::contains(const std::vector<Rational>& pt) const {
  return point_in_closed_boxes(boxes_, pt);
}

bool ClosedSet::contains(int point) const {
  return std::binary_search(points_.begin(), points_.end(), point);
}

bool ClosedSet::operator==(const ClosedSet& o) const {
  if (!(space_ == o.space_)) return false;
  if (space_.is_discrete()) return points_ == o.points_;
  return cs_subset(*this, o) && cs_subset(o, *this);
}

// -------------------------------------------------------------- operations

OpenSet os_union(const OpenSet& a, const OpenSet& b) {
  require_same_space(a.space(), b.space(), "os_union");
  if (a.space().is_discrete()) {
    std::vector<int> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    return OpenSet::from_points(a.space(), std::move(pts));
  }
  std::vector<Box> boxes = a.boxes();
  boxes.insert(boxes.end(), b.boxes().begin(), b.boxes().end());
  return OpenSet::from_boxes(a.space(), std::move(boxes));
}

OpenSet os_intersect(const OpenSet& a, const OpenSet& b) {
  require_same_space(a.space(), b.space(), "os_intersect");
  if (a.space().is_discrete()) {
    std::vector<int> pts;
    std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                          b.points().end(), std::back_inserter(pts));
    return OpenSet::from_points(a.space(), std::move(pts));
  }
  std::vector<Box> boxes;
  for (const auto& x : a.boxes())
    for (const auto& y : b.boxes()) {
      Box z(x.size());
      bool nonempty = true;
      for (std::size_t k = 0; k < x.size() && nonempty; ++k) {
        z[k] = {std::max(x[k].lo, y[k].lo), std::min(x[k].hi, y[k].hi)};
        nonempty = z[k].lo < z[k].hi;
      }
      if (nonempty) boxes.push_back(std::move(z));
    }
  return OpenSet::from_boxes(a.space(), std::move(boxes));
}

OpenSet os_product(const OpenSet& a, const OpenSet& b) {
  if (!a.space().is_cube() || !b.space().is_cube())
    throw SpaceMismatch("os_product requires cube spaces");
  SpaceDescriptor prod = SpaceDescriptor::cube(a.space().extent + b.space().extent);
  std::vector<Box> boxes;
  for (const auto& x : a.boxes())
    for (const auto& y : b.boxes()) {
      Box z = x;
      z.insert(z.end(), y.begin(), y.end());
      boxes.push_back(std::move(z));
    }
  return OpenSet::from_boxes(prod, std::move(boxes));
}

bool os_subset(const OpenSet& a, const OpenSet& b) {
  require_same_space(a.space(), b.space(), "os_subset");
  if (a.space().is_discrete())
    return std::includes(b.points().begin(), b.points().end(), a.points().begin(),
                         a.points().end());
  if (a.boxes().empty()) return true;
  Grid g = fresh_grid(a.space().extent);
  grid_add_open(g, a.boxes());
  grid_add_open(g, b.boxes());
  grid_finish(g);
  bool ok = true;
  for_each_cell(g, [&](const std::vector<int>& p) {
    if (!ok) return;
    auto rep = cell_rep(g, p);
    if (point_in_boxes(a.boxes(), rep) && !point_in_boxes(b.boxes(), rep)) ok = false;
  });
  return ok;
}

bool os_disjoint(const OpenSet& a, const OpenSet& b) { return os_intersect(a, b).is_empty(); }

bool os_way_below(const OpenSet& a, const OpenSet& b) {
  require_same_space(a.space(), b.space(), "os_way_below");
  if (a.space().is_discrete())
    return std::includes(b.points().begin(), b.points().end(), a.points().begin(),
                         a.points().end());
  if (a.boxes().empty()) return true;
  Grid g = fresh_grid(a.space().extent);
  grid_add_open(g, a.boxes());
  grid_add_open(g, b.boxes());
  grid_finish(g);
  auto ma = member_cells_open(g, a.boxes());
  auto mb = member_cells_open(g, b.boxes());
  auto cl = closure_cells(g, ma);
  for (std::size_t i = 0; i < cl.size(); ++i)
    if (cl[i] && !mb[i]) return false;
  return true;
}

ClosedSet os_closure(const OpenSet& o) {
  if (o.space().is_discrete()) return ClosedSet::from_points(o.space(), o.points());
  if (o.boxes().empty()) return ClosedSet::empty(o.space());
  std::vector<ClosedBox> boxes;
  for (const auto& b : o.boxes()) {
    ClosedBox c(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) c[k] = {b[k].lo, b[k].hi};
    boxes.push_back(std::move(c));
  }
  return ClosedSet::from_boxes(o.space(), std::move(boxes));
}

OpenSet os_interpolate(const OpenSet& a, const OpenSet& b) {
  require_same_space(a.space(), b.space(), "os_interpolate");
  if (!os_way_below(a, b)) throw OrderViolation("os_interpolate requires a << b");
  if (a.space().is_discrete() || a.is_empty()) return a;
  ClosedSet cl = os_closure(a);
  Rational eps(1, 4);
  for (int iter = 0; iter < 256; ++iter, eps /= 2) {
    std::vector<Box> boxes;
    for (const auto& cb : cl.boxes()) {
      Box nb(cb.size());
      for (std::size_t k = 0; k < cb.size(); ++k) {
        Rational lo = cb[k].lo - eps;
        Rational hi = cb[k].hi + eps;
        nb[k] = {std::max(Rational(0), lo), std::min(Rational(1), hi)};
      }
      boxes.push_back(std::move(nb));
    }
    OpenSet c = OpenSet::from_boxes(a.space(), std::move(boxes));
    if (os_way_below(c, b)) return c;
  }
  throw NonConvergence("os_interpolate: no rational interpolant found");
}

ClosedSet closed_complement(const OpenSet& o) {
  if (o.space().is_discrete()) {
    std::vector<int> pts;
    for (int i = 0; i < o.space().extent; ++i)
      if (!o.contains(i)) pts.push_back(i);
    return ClosedSet::from_points(o.space(), std::move(pts));
  }
  Grid g = fresh_grid(o.space().extent);
  grid_add_open(g, o.boxes());
  grid_finish(g);
  std::vector<ClosedBox> boxes;
  for_each_cell(g, [&](const std::vector<int>& p) {
    if (!point_in_boxes(o.boxes(), cell_rep(g, p))) boxes.push_back(cell_closure_box(g, p));
  });
  return ClosedSet::from_boxes(o.space(), std::move(boxes));
}

OpenSet open_interior_of_complement(const ClosedSet& c) {
  if (c.space().is_discrete()) {
    std::vector<int> pts;
    for (int i = 0; i < c.space().extent; ++i)
      if (!c.contains(i)) pts.push_back(i);
    return OpenSet::from_points(c.space(), std::move(pts));
  }
  int dim = c.space().extent;
  Grid g = fresh_grid(dim);
  grid_add_closed(g, c.boxes());
  grid_finish(g);
  auto strides = cell_strides(g);
  auto in_c = member_cells_closed(g, c.boxes());
  // A cell belongs to the box-representable interior of the complement iff
  // every cell reachable by spanning its degenerate axes one piece either way
  // avoids c; degenerate axes pinned at a cube-boundary cut cannot be spanned.
  std::vector<char> member(in_c.size(), 0);
  for_each_cell(g, [&](const std::vector<int>& p) {
    std::vector<std::vector<int>> choices(dim);
    for (int k = 0; k < dim; ++k) {
      if (p[k] % 2 == 1) {
        choices[k] = {p[k]};
      } else {
        if (p[k] == 0 || p[k] == piece_count(g, k) - 1) return;  // boundary face
        choices[k] = {p[k] - 1, p[k], p[k] + 1};
      }
    }
    std::vector<int> idx(dim, 0), q(dim);
    while (true) {
      for (int k = 0; k < dim; ++k) q[k] = choices[k][idx[k]];
      if (in_c[cell_id(strides, q)]) return;
      int k = dim - 1;
      while (k >= 0) {
        if (++idx[k] < static_cast<int>(choices[k].size())) break;
        idx[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
    member[cell_id(strides, p)] = 1;
  });
  return OpenSet::from_boxes(c.space(), extract_open_boxes(g, member));
}

ClosedSet cs_union(const ClosedSet& a, const ClosedSet& b) {
  require_same_space(a.space(), b.space(), "cs_union");
  if (a.space().is_discrete()) {
    std::vector<int> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    return ClosedSet::from_points(a.space(), std::move(pts));
  }
  std::vector<ClosedBox> boxes = a.boxes();
  boxes.insert(boxes.end(), b.boxes().begin(), b.boxes().end());
  return ClosedSet::from_boxes(a.space(), std::move(boxes));
}

bool cs_subset(const ClosedSet& a, const ClosedSet& b) {
  require_same_space(a.space(), b.space(), "cs_subset");
  if (a.space().is_discrete())
    return std::includes(b.points().begin(), b.points().end(), a.points().begin(),
                         a.points().end());
  if (a.boxes().empty()) return true;
  Grid g = fresh_grid(a.space().extent);
  grid_add_closed(g, a.boxes());
  grid_add_closed(g, b.boxes());
  grid_finish(g);
  bool ok = true;
  for_each_cell(g, [&](const std::vector<int>& p) {
    if (!ok) return;
    auto rep = cell_rep(g, p);
    if (point_in_closed_boxes(a.boxes(), rep) && !point_in_closed_boxes(b.boxes(), rep))
      ok = false;
  });
  return ok;
}

bool cs_covers(const ClosedSet& a, const ClosedSet& b) {
  require_same_space(a.space(), b.space(), "cs_covers");
  if (a.space().is_discrete()) {
    for (int i = 0; i < a.space().extent; ++i)
      if (!a.contains(i) && !b.contains(i)) return false;
    return true;
  }
  Grid g = fresh_grid(a.space().extent);
  grid_add_closed(g, a.boxes());
  grid_add_closed(g, b.boxes());
  grid_finish(g);
  bool ok = true;
  for_each_cell(g, [&](const std::vector<int>& p) {
    if (!ok) return;
    auto rep = cell_rep(g, p);
    if (!point_in_closed_boxes(a.boxes(), rep) && !point_in_closed_boxes(b.boxes(), rep))
      ok = false;
  });
  return ok;
}

std::vector<Box> disjoint_full_cells(const OpenSet& o) {
  if (!o.space().is_cube()) throw SpaceMismatch("disjoint_full_cells requires a cube space");
  if (o.boxes().empty()) return {};
  Grid g = fresh_grid(o.space().extent);
  grid_add_open(g, o.boxes());
  grid_finish(g);
  std::vector<Box> cells;
  for_each_cell(g, [&](const std::vector<int>& p) {
    for (int v : p)
      if (v % 2 == 0) return;
    if (!point_in_boxes(o.boxes(), cell_rep(g, p))) return;
    Box b(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
      b[k] = {g[k][p[k] / 2], g[k][p[k] / 2 + 1]};
    cells.push_back(std::move(b));
  });
  return cells;
}

}  // namespace credal
