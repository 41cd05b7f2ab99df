#include <algorithm>
#include <unordered_map>

#include "check_internal.hpp"

namespace conemm::detail {
namespace {

using Mode = ExtremalMode;

bool is_v(PropertyKind k) { return k == PropertyKind::transfer_properly_v; }

/// Violation of the transfer-properly conclusion for index x_i, if the
/// premise holds and the conclusion fails.
std::optional<Vec> transfer_properly_violation(EvalContext& ctx, PropertyKind kind,
                                               int xi, int xl, int z) {
  if (ctx.meets(xl, z, ctx.row_extremal(xi, Mode::min_w))) return std::nullopt;
  if (is_v(kind))
    return first_uncovered(ctx.extremal(xl, z, Mode::max), ctx.extremal(xi, z, Mode::max),
                           ctx.cone(), Inclusion::minus);
  return first_uncovered(ctx.extremal(xi, z, Mode::min), ctx.extremal(xl, z, Mode::min),
                         ctx.cone(), Inclusion::plus);
}

/// A greatest element of Max(F(x, X)), if one exists.
std::optional<Vec> alpha_point(EvalContext& ctx, int x) {
  const PointCloud& top = ctx.row_extremal(x, Mode::max);
  for (std::size_t k = 0; k < top.size(); ++k) {
    const PointCloud cand = PointCloud::singleton(top[k]);
    if (!first_uncovered(top, cand, ctx.cone(), Inclusion::minus)) return top.point(k);
  }
  return std::nullopt;
}

bool gamma_pair_ok(EvalContext& ctx, int xi, int yi, int ystar) {
  return !first_uncovered(ctx.extremal(xi, yi, Mode::max),
                          ctx.extremal(xi, ystar, Mode::max), ctx.cone(),
                          Inclusion::minus) &&
         ctx.meets(xi, yi, ctx.row_extremal(xi, Mode::max_w));
}

/// Second-grid ids inside the convex hull of the tuple.
std::vector<int> hull_candidates(EvalContext& ctx, const std::vector<Coord>& xs) {
  std::vector<int> out;
  const int ny = ctx.second_grid_size();
  if (xs.front().dim() == 1 && ctx.second_point(0).dim() == 1) {
    double lo = xs.front()[0], hi = lo;
    for (const auto& x : xs) {
      lo = std::min(lo, x[0]);
      hi = std::max(hi, x[0]);
    }
    for (int y = 0; y < ny; ++y) {
      const double v = ctx.second_point(y)[0];
      if (v >= lo - 1e-12 && v <= hi + 1e-12) out.push_back(y);
    }
    return out;
  }
  std::vector<char> seen(ny, 0);
  for (const auto& l : lambda_grid(static_cast<int>(xs.size()), ctx.config().lambda_steps).lambdas) {
    const Coord c = combine(xs, l);
    if (!ctx.view().second_grid().contains(c)) continue;
    const int id = ctx.second_id(c);
    if (id < ny && !seen[id]) {
      seen[id] = 1;
      out.push_back(id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Verdict check_transfer_properly(const SetValuedFixture& fx, const Cone& cone,
                                const PropertySpec& spec, const CheckOptions& opt) {
  if (fx.arity() != 2) throw InvalidInput("transfer conditions need a two-argument fixture");
  Verdict out = blank_verdict(fx, cone, spec, opt.cfg);
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  const LambdaGrid& lg = lambda_grid(2, opt.cfg.lambda_steps);
  const int ny = ctx.second_grid_size();
  long long pairs = 0, checks = 0;

  for_each_tuple(ctx.first_grid_size(), 2, [&](const std::vector<int>& ids) {
    ++pairs;
    const auto xs = points_of(ctx, ids);
    for (std::size_t l = 0; l < lg.lambdas.size(); ++l) {
      if (!lg.interior[l]) continue;
      const int xl = ctx.first_id(combine(xs, lg.lambdas[l]));
      for (int z = 0; z < ny; ++z) {
        for (int i = 0; i < 2; ++i) {
          ++checks;
          auto v = transfer_properly_violation(ctx, spec.kind, ids[i], xl, z);
          if (!v) continue;
          out.status = Status::refuted;
          out.witness.x = xs;
          out.witness.y = {ctx.second_point(z)};
          out.witness.lambda = lg.lambdas[l];
          out.witness.index = i;
          out.witness.values = {*v};
          return false;
        }
      }
    }
    return true;
  });
  out.coverage["pairs"] = pairs;
  out.coverage["z"] = ny;
  out.coverage["checks"] = checks;
  return out;
}

bool replay_transfer_properly(const Verdict& v, const SetValuedFixture& fx,
                              const Cone& cone, const CheckOptions& opt) {
  if (v.status != Status::refuted) return false;
  const Witness& w = v.witness;
  if (w.x.size() != 2 || w.y.size() != 1 || w.lambda.size() != 2) return false;
  if (w.index < 0 || w.index > 1) return false;
  EvalContext ctx(oriented_view(fx, v.property), cone, opt.cfg);
  const int xi = ctx.first_id(w.x[w.index]);
  const int xl = ctx.first_id(combine(w.x, w.lambda));
  return transfer_properly_violation(ctx, v.property.kind, xi, xl, ctx.second_id(w.y[0]))
      .has_value();
}

Verdict check_alpha(const SetValuedFixture& fx, const Cone& cone, const PropertySpec& spec,
                    const CheckOptions& opt) {
  Verdict out = blank_verdict(fx, cone, spec, opt.cfg);
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  for (int x = 0; x < ctx.first_grid_size(); ++x) {
    Witness w;
    w.x = {ctx.first_point(x)};
    if (auto z = alpha_point(ctx, x)) {
      w.values = {*z};
      out.table.push_back(std::move(w));
      continue;
    }
    out.status = Status::not_confirmed;
    w.values = ctx.row_extremal(x, Mode::max).to_vectors();
    w.note = "Max of the row union has no greatest element";
    out.witness = std::move(w);
    out.table.clear();
    break;
  }
  if (out.status == Status::confirmed && !out.table.empty()) out.witness = out.table.front();
  out.coverage["x"] = ctx.first_grid_size();
  out.coverage["y"] = ctx.second_grid_size();
  return out;
}

bool replay_alpha(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                  const CheckOptions& opt) {
  if (v.status != Status::confirmed || v.table.empty()) return false;
  EvalContext ctx(oriented_view(fx, v.property), cone, opt.cfg);
  for (const auto& w : v.table) {
    if (w.x.size() != 1 || w.values.size() != 1) return false;
    const PointCloud& top = ctx.row_extremal(ctx.first_id(w.x[0]), Mode::max);
    if (!top.contains_near(w.values[0], cone.eps_cone())) return false;
    if (first_uncovered(top, PointCloud::singleton(w.values[0]), cone, Inclusion::minus))
      return false;
  }
  return true;
}

Verdict check_gamma(const SetValuedFixture& fx, const Cone& cone, const PropertySpec& spec,
                    const CheckOptions& opt) {
  if (fx.arity() != 2) throw InvalidInput("condition gamma needs a two-argument fixture");
  Verdict out = blank_verdict(fx, cone, spec, opt.cfg);
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  const int ny = ctx.second_grid_size();
  std::unordered_map<std::uint64_t, int> good;
  auto good_y = [&](int xi, int ystar) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(xi) << 32) | static_cast<std::uint32_t>(ystar);
    if (auto it = good.find(key); it != good.end()) return it->second;
    int hit = -1;
    for (int y = 0; y < ny && hit < 0; ++y)
      if (gamma_pair_ok(ctx, xi, y, ystar)) hit = y;
    good.emplace(key, hit);
    return hit;
  };

  long long tuples = 0, candidates = 0;
  bool found = false;
  for (int n = 1; n <= opt.cfg.n_max && !found; ++n) {
    for_each_tuple(ctx.first_grid_size(), n, [&](const std::vector<int>& ids) {
      ++tuples;
      const auto xs = points_of(ctx, ids);
      for (int ystar : hull_candidates(ctx, xs)) {
        ++candidates;
        std::vector<int> ys;
        for (int xi : ids) {
          const int y = good_y(xi, ystar);
          if (y < 0) break;
          ys.push_back(y);
        }
        if (ys.size() != ids.size()) continue;
        found = true;
        out.witness.x = xs;
        for (int y : ys) out.witness.y.push_back(ctx.second_point(y));
        out.witness.y.push_back(ctx.second_point(ystar));
        out.witness.index = n;
        out.witness.note = "y[index] is the hull point y*";
        return false;
      }
      return true;
    });
  }
  if (!found) {
    out.status = Status::not_confirmed;
    out.witness.note = "no tuple and hull point satisfy the condition";
  }
  out.coverage["tuples"] = tuples;
  out.coverage["hull_points"] = candidates;
  return out;
}

bool replay_gamma(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                  const CheckOptions& opt) {
  if (v.status != Status::confirmed) return false;
  const Witness& w = v.witness;
  const int n = static_cast<int>(w.x.size());
  if (n == 0 || static_cast<int>(w.y.size()) != n + 1 || w.index != n) return false;
  EvalContext ctx(oriented_view(fx, v.property), cone, opt.cfg);
  const int ystar = ctx.second_id(w.y[n]);
  const auto hull = hull_candidates(ctx, w.x);
  if (std::find(hull.begin(), hull.end(), ystar) == hull.end()) return false;
  for (int i = 0; i < n; ++i)
    if (!gamma_pair_ok(ctx, ctx.first_id(w.x[i]), ctx.second_id(w.y[i]), ystar))
      return false;
  return true;
}

}  // namespace conemm::detail
