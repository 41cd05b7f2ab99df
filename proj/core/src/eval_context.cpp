#include "conemm/eval_context.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace conemm {

std::size_t CoordHash::operator()(const Coord& c) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(c.dim());
  for (int a = 0; a < c.dim(); ++a) {
    const double v = c[a] == 0.0 ? 0.0 : c[a];
    h ^= std::bit_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::optional<Vec> first_uncovered(const PointCloud& a, const PointCloud& b,
                                   const Cone& cone, Inclusion inc) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = a[i];
    bool covered = false;
    for (std::size_t j = 0; j < b.size() && !covered; ++j) {
      const auto q = b[j];
      switch (inc) {
        case Inclusion::minus: covered = cone.dominates(q, p); break;
        case Inclusion::minus_interior: covered = cone.dominates_interior(q, p); break;
        case Inclusion::plus: covered = cone.dominates(p, q); break;
        case Inclusion::plus_interior: covered = cone.dominates_interior(p, q); break;
      }
    }
    if (!covered) return Vec(p.begin(), p.end());
  }
  return std::nullopt;
}

struct EvalContext::Cell {
  ValueSet region;
  std::optional<PointCloud> values;
  std::array<std::optional<PointCloud>, 4> ext;
};

struct EvalContext::Row {
  struct Piece {
    double lo, hi;
    bool open_lo, open_hi;
  };
  std::vector<const ValueSet*> regions;
  bool merged = false;
  std::vector<Piece> pieces;
  std::optional<PointCloud> anchor;
  std::array<std::optional<PointCloud>, 4> ext;
};

EvalContext::EvalContext(FixtureView view, Cone cone, ToleranceConfig cfg)
    : view_(view), cone_(std::move(cone)), cfg_(cfg) {
  cfg_.validate();
  if (cone_.dim() != view_.codomain_dim())
    throw InvalidInput("cone dimension " + std::to_string(cone_.dim()) +
                       " does not match value dimension " +
                       std::to_string(view_.codomain_dim()));
  lattice_factor_ = view_.fixture().params().lattice_factor;
  for (const auto& p : view_.first_grid().points()) {
    if (first_ids_.emplace(p, static_cast<int>(first_pts_.size())).second)
      first_pts_.push_back(p);
  }
  for (const auto& p : view_.second_grid().points()) {
    if (second_ids_.emplace(p, static_cast<int>(second_pts_.size())).second)
      second_pts_.push_back(p);
  }
  first_grid_ = static_cast<int>(first_pts_.size());
  second_grid_ = static_cast<int>(second_pts_.size());
  rows_.resize(first_pts_.size());
}

EvalContext::~EvalContext() = default;

int EvalContext::first_id(const Coord& x) {
  if (auto it = first_ids_.find(x); it != first_ids_.end()) return it->second;
  const Coord c = view_.first_grid().snap(x, lattice_factor_);
  auto [it, fresh] = first_ids_.emplace(c, static_cast<int>(first_pts_.size()));
  if (fresh) {
    first_pts_.push_back(c);
    rows_.emplace_back();
  }
  if (!(c == x)) first_ids_.emplace(x, it->second);
  return it->second;
}

int EvalContext::second_id(const Coord& y) {
  if (auto it = second_ids_.find(y); it != second_ids_.end()) return it->second;
  if (view_.fixture().arity() == 1) return 0;
  const Coord c = view_.second_grid().snap(y, lattice_factor_);
  auto [it, fresh] = second_ids_.emplace(c, static_cast<int>(second_pts_.size()));
  if (fresh) second_pts_.push_back(c);
  if (!(c == y)) second_ids_.emplace(y, it->second);
  return it->second;
}

EvalContext::Cell& EvalContext::cell(int xid, int yid) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(xid) << 32) | static_cast<std::uint32_t>(yid);
  auto it = cells_.find(key);
  if (it != cells_.end()) return *it->second;
  auto c = std::make_unique<Cell>();
  c->region = view_.region(first_pts_[xid], second_pts_[yid]);
  return *cells_.emplace(key, std::move(c)).first->second;
}

const ValueSet& EvalContext::region(int xid, int yid) { return cell(xid, yid).region; }

const PointCloud& EvalContext::values(int xid, int yid) {
  Cell& c = cell(xid, yid);
  if (!c.values) c.values = c.region.sample(view_.value_resolution());
  return *c.values;
}

const PointCloud& EvalContext::extremal(int xid, int yid, ExtremalMode mode) {
  Cell& c = cell(xid, yid);
  auto& slot = c.ext[static_cast<int>(mode)];
  if (slot) return *slot;
  // Samples of 2-D values are large; only keep them when asked for directly.
  if (c.values)
    slot = extremal_points(*c.values, cone_, mode);
  else
    slot = extremal_points(c.region.sample(view_.value_resolution()), cone_, mode);
  return *slot;
}

EvalContext::Row& EvalContext::row(int xid) {
  auto& r = rows_[xid];
  if (r) return *r;
  r = std::make_unique<Row>();
  bool one_dim = value_dim() == 1;
  for (int y = 0; y < second_grid_; ++y) {
    const ValueSet& v = region(xid, y);
    r->regions.push_back(&v);
    one_dim = one_dim && v.kind() != ValueSet::Kind::disc;
  }
  if (!one_dim) return *r;

  std::vector<Row::Piece> ps;
  for (const ValueSet* v : r->regions) {
    if (v->kind() == ValueSet::Kind::interval) {
      ps.push_back({v->lo(), v->hi(), v->open_lo(), v->open_hi()});
    } else {
      for (std::size_t i = 0; i < v->point_set().size(); ++i) {
        const double p = v->point_set()[i][0];
        ps.push_back({p, p, false, false});
      }
    }
  }
  std::sort(ps.begin(), ps.end(), [](const Row::Piece& a, const Row::Piece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return !a.open_lo && b.open_lo;
  });
  for (const auto& p : ps) {
    if (!r->pieces.empty()) {
      auto& cur = r->pieces.back();
      const bool touch =
          p.lo < cur.hi || (p.lo == cur.hi && (!cur.open_hi || !p.open_lo));
      if (touch) {
        if (p.hi > cur.hi) {
          cur.hi = p.hi;
          cur.open_hi = p.open_hi;
        } else if (p.hi == cur.hi) {
          cur.open_hi = cur.open_hi && p.open_hi;
        }
        continue;
      }
    }
    r->pieces.push_back(p);
  }
  r->merged = true;
  return *r;
}

bool EvalContext::row_contains(int xid, ConstSpan p) {
  Row& r = row(xid);
  const double tol = cone_.eps_cone();
  if (r.merged) {
    const double x = p[0];
    auto it = std::upper_bound(r.pieces.begin(), r.pieces.end(), x + tol,
                               [](double v, const Row::Piece& q) { return v < q.lo; });
    // Pieces are disjoint; only the last two starting at or before x matter.
    for (int back = 0; back < 2 && it != r.pieces.begin(); ++back) {
      --it;
      const bool above = it->open_lo ? x - it->lo > tol : x >= it->lo - tol;
      const bool below = it->open_hi ? it->hi - x > tol : x <= it->hi + tol;
      if (above && below) return true;
    }
    return false;
  }
  for (const ValueSet* v : r.regions)
    if (v->contains(p, tol)) return true;
  return false;
}

const PointCloud& EvalContext::row_extremal(int xid, ExtremalMode mode) {
  Row& r = row(xid);
  auto& slot = r.ext[static_cast<int>(mode)];
  if (slot) return *slot;
  // Extremal points of a union are extremal in their own member set.
  PointCloud pool(value_dim());
  for (int y = 0; y < second_grid_; ++y) pool.append(extremal(xid, y, mode));
  slot = extremal_points(pool, cone_, mode);
  return *slot;
}

PointCloud EvalContext::intersect_with_row(int xid, int yid, int row_xid) {
  const PointCloud& a = values(xid, yid);
  const ValueSet& reg = region(xid, yid);
  PointCloud out(value_dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (row_contains(row_xid, a[i])) out.push_back(a[i]);

  const PointCloud& anchor = row_anchor(row_xid);
  const double tol = cone_.eps_cone();
  for (std::size_t i = 0; i < anchor.size(); ++i)
    if (reg.contains(anchor[i], tol)) out.push_back(anchor[i]);
  return out;
}

const PointCloud& EvalContext::row_anchor(int row_xid) {
  Row& r = row(row_xid);
  if (r.anchor) return *r.anchor;
  PointCloud anchor(value_dim());
  if (r.merged) {
    for (const auto& p : r.pieces) {
      if (!p.open_lo) anchor.push_back(std::array<double, 1>{p.lo});
      if (!p.open_hi && p.hi != p.lo) anchor.push_back(std::array<double, 1>{p.hi});
    }
  } else {
    for (int y = 0; y < second_grid_; ++y) anchor.append(values(row_xid, y));
    anchor = anchor.deduplicated(cone_.eps_cone());
  }
  r.anchor = std::move(anchor);
  return *r.anchor;
}

PointCloud EvalContext::meet_extremal(int xid, int yid, int row_xid, ExtremalMode mode) {
  const ValueSet& reg = region(xid, yid);
  if (value_dim() != 1 || cone_.normals().size() != 1 ||
      reg.kind() != ValueSet::Kind::interval) {
    const PointCloud meet = intersect_with_row(xid, yid, row_xid);
    return meet.empty() ? meet : extremal_points(meet, cone_, mode);
  }
  // Interval samples ascend, so scan them best-first and stop once past the
  // tolerance band of the first hit.
  const double n = cone_.normals()[0][0];
  const bool upper = mode == ExtremalMode::max || mode == ExtremalMode::max_w;
  auto u = [&](double v) { return upper ? n * v : -n * v; };
  const PointCloud& a = values(xid, yid);
  const std::size_t m = a.size();
  const bool from_end = u(a[m - 1][0]) >= u(a[0][0]);
  const double slack = std::max(cone_.eps_cone(), cone_.eps_interior());
  PointCloud cand(1);
  std::optional<double> best;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = from_end ? m - 1 - k : k;
    const double v = a[i][0];
    if (best && *best - u(v) > slack) break;
    if (!row_contains(row_xid, a[i])) continue;
    if (!best) best = u(v);
    cand.push_back(a[i]);
  }
  const PointCloud& anchor = row_anchor(row_xid);
  for (std::size_t i = 0; i < anchor.size(); ++i)
    if (reg.contains(anchor[i], cone_.eps_cone())) cand.push_back(anchor[i]);
  return cand.empty() ? cand : extremal_points(cand, cone_, mode);
}

bool EvalContext::meets(int xid, int yid, const PointCloud& pts) {
  const ValueSet& reg = region(xid, yid);
  const double tol = cone_.eps_cone();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (reg.contains(pts[i], tol)) return true;
  return false;
}

}  // namespace conemm
