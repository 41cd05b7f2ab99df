#include "conemm/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace conemm {

std::string to_string(ExtremalMode mode) {
  switch (mode) {
    case ExtremalMode::min: return "min";
    case ExtremalMode::min_w: return "min_w";
    case ExtremalMode::max: return "max";
    case ExtremalMode::max_w: return "max_w";
  }
  return "?";
}

ExtremalMode parse_extremal_mode(std::string_view s) {
  if (s == "min") return ExtremalMode::min;
  if (s == "min_w") return ExtremalMode::min_w;
  if (s == "max") return ExtremalMode::max;
  if (s == "max_w") return ExtremalMode::max_w;
  throw InvalidInput("unknown extremal mode '" + std::string(s) + "'");
}

ExtremalMode mirrored(ExtremalMode mode) {
  switch (mode) {
    case ExtremalMode::min: return ExtremalMode::max;
    case ExtremalMode::min_w: return ExtremalMode::max_w;
    case ExtremalMode::max: return ExtremalMode::min;
    case ExtremalMode::max_w: return ExtremalMode::min_w;
  }
  return mode;
}

namespace {

/// One normal n: p beats z iff u(p) - u(z) exceeds the tolerance, u = +-n p.
PointCloud extremal_points_1d(const PointCloud& a, const Cone& cone, bool upper,
                              bool weak) {
  const double n = cone.normals()[0][0];
  const std::size_t m = a.size();
  auto u = [&](std::size_t i) { return upper ? n * a[i][0] : -n * a[i][0]; };
  double best = u(0);
  for (std::size_t i = 1; i < m; ++i) best = std::max(best, u(i));
  std::vector<double> kept;
  for (std::size_t i = 0; i < m; ++i) {
    const double gap = best - u(i);
    if (weak ? gap < cone.eps_interior() : gap <= cone.eps_cone()) kept.push_back(a[i][0]);
  }
  std::sort(kept.begin(), kept.end());
  PointCloud out(1);
  double last = 0.0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i > 0 && kept[i] - last <= cone.eps_cone()) continue;
    last = kept[i];
    out.push_back(std::array<double, 1>{kept[i]});
  }
  return out;
}

}  // namespace

PointCloud extremal_points(const PointCloud& a, const Cone& cone,
                           ExtremalMode mode) {
  if (a.empty()) throw InvalidInput("extremal points of an empty set");
  if (a.dim() != cone.dim())
    throw InvalidInput("point dimension does not match cone dimension");
  const bool upper = mode == ExtremalMode::max || mode == ExtremalMode::max_w;
  const bool weak = mode == ExtremalMode::min_w || mode == ExtremalMode::max_w;
  if (cone.dim() == 1 && cone.normals().size() == 1)
    return extremal_points_1d(a, cone, upper, weak);
  const PointCloud pts = a.deduplicated(cone.eps_cone());
  const std::size_t n = pts.size();

  // Orient so that "a beats z" always reads a - z in S (or int S).
  std::vector<double> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    key[i] = cone.order_key(pts[i]);
    if (!upper) key[i] = -key[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return key[x] > key[y]; });

  auto beats = [&](std::size_t p, std::size_t z) {
    if (weak)
      return upper ? cone.dominates_interior(pts[p], pts[z])
                   : cone.dominates_interior(pts[z], pts[p]);
    const bool fwd = upper ? cone.dominates(pts[p], pts[z])
                           : cone.dominates(pts[z], pts[p]);
    if (!fwd) return false;
    const bool back = upper ? cone.dominates(pts[z], pts[p])
                            : cone.dominates(pts[p], pts[z]);
    return !back;
  };

  // A beating point has key >= key(z) - m * eps_cone.
  const double slack =
      static_cast<double>(cone.normals().size()) * cone.eps_cone() + 1e-15;
  std::vector<char> keep(n, 1);
  for (std::size_t z = 0; z < n; ++z) {
    const double floor_key = key[z] - slack;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t p = order[q];
      if (key[p] < floor_key) break;
      if (p != z && beats(p, z)) {
        keep[z] = 0;
        break;
      }
    }
  }
  PointCloud out(pts.dim());
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) out.push_back(pts[i]);
  return out;
}

ExtremalFactsReport check_extremal_facts(const PointCloud& a, const Cone& cone) {
  if (a.empty()) throw InvalidInput("extremal facts need a nonempty set");
  const PointCloud mn = extremal_points(a, cone, ExtremalMode::min);
  const PointCloud mnw = extremal_points(a, cone, ExtremalMode::min_w);
  const PointCloud mx = extremal_points(a, cone, ExtremalMode::max);
  const PointCloud mxw = extremal_points(a, cone, ExtremalMode::max_w);

  const double zero_tol_sq = cone.eps_cone() * cone.eps_cone();
  // a in B + (int S u {0}) for upper=false; a in B - (int S u {0}) otherwise.
  auto within_interior_or_zero = [&](const PointCloud& b, bool minus) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      bool ok = false;
      for (std::size_t j = 0; j < b.size() && !ok; ++j) {
        ok = distance_sq(a[i], b[j]) <= zero_tol_sq ||
             (minus ? cone.dominates_interior(b[j], a[i])
                    : cone.dominates_interior(a[i], b[j]));
      }
      if (!ok) return false;
    }
    return true;
  };

  ExtremalFactsReport r;
  r.min_nonempty = !mn.empty();
  r.max_nonempty = !mx.empty();
  r.within_min_plus_cone =
      r.min_nonempty && subset_of_translate(a, mn, cone, Sign::plus);
  r.within_max_minus_cone =
      r.max_nonempty && subset_of_translate(a, mx, cone, Sign::minus);
  r.within_min_w_plus_interior = !mnw.empty() && within_interior_or_zero(mnw, false);
  r.within_max_w_minus_interior = !mxw.empty() && within_interior_or_zero(mxw, true);
  return r;
}

PointCloud convex_combination_samples(const PointCloud& a, int coeff_steps) {
  if (a.empty()) throw InvalidInput("convex combinations of an empty set");
  if (coeff_steps <= 0) throw InvalidInput("coeff_steps must be positive");
  const int d = a.dim();
  PointCloud out(d);
  out.append(a);
  Vec p(d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (int k = 1; k < coeff_steps; ++k) {
        const double t = static_cast<double>(k) / coeff_steps;
        for (int c = 0; c < d; ++c) {
          const double v = (1.0 - t) * a[i][c] + t * a[j][c];
          p[c] = std::abs(v) < 1e-14 ? 0.0 : v;
        }
        out.push_back(p);
      }
    }
  }
  return out.deduplicated(1e-12);
}

}  // namespace conemm
