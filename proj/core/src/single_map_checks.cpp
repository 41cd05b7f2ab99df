#include <optional>

#include "check_internal.hpp"

namespace conemm::detail {
namespace {

using Mode = ExtremalMode;

/// Hull samples shared by every lambda of one (x1, x2, slice).
PointCloud prepare(EvalContext& ctx, PropertyKind kind, int x1, int x2, int y) {
  const Cone& cone = ctx.cone();
  const int steps = ctx.config().coeff_steps;
  switch (kind) {
    case PropertyKind::naturally_qc_iii:
    case PropertyKind::naturally_qc_v: {
      const Mode m = kind == PropertyKind::naturally_qc_iii ? Mode::min : Mode::max;
      PointCloud pool = ctx.extremal(x1, y, m);
      pool.append(ctx.extremal(x2, y, m));
      return convex_combination_samples(extremal_points(pool, cone, m), steps);
    }
    case PropertyKind::s_qc: {
      if (!cone.simplicial())
        throw InvalidInput("s_qc needs a simplicial cone, got " + cone.describe());
      const PointCloud& a = ctx.extremal(x1, y, Mode::min);
      const PointCloud& b = ctx.extremal(x2, y, Mode::min);
      PointCloud joins(ctx.value_dim());
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) joins.push_back(*cone.join(a[i], b[j]));
      return joins;
    }
    default:
      return {};
  }
}

/// Min F(x_lambda, y) as a target; convex regions also get chord samples so a
/// sampled boundary arc does not read as a staircase.
PointCloud min_target(EvalContext& ctx, int xl, int y) {
  const PointCloud& e = ctx.extremal(xl, y, Mode::min);
  const ValueSet& r = ctx.region(xl, y);
  if (r.kind() == ValueSet::Kind::points && r.point_set().size() > 1) return e;
  return convex_combination_samples(e, ctx.config().coeff_steps);
}

/// Violating points at one lambda, or nullopt when the condition holds.
std::optional<std::vector<Vec>> pair_violation(EvalContext& ctx, PropertyKind kind,
                                               int x1, int x2, int xl, int y,
                                               const PointCloud& prepared) {
  const Cone& cone = ctx.cone();
  switch (kind) {
    case PropertyKind::properly_qc_iii: {
      auto v1 = first_uncovered(ctx.extremal(x1, y, Mode::min),
                                ctx.extremal(xl, y, Mode::min), cone, Inclusion::plus);
      if (!v1) return std::nullopt;
      auto v2 = first_uncovered(ctx.extremal(x2, y, Mode::min),
                                ctx.extremal(xl, y, Mode::min), cone, Inclusion::plus);
      if (!v2) return std::nullopt;
      return std::vector<Vec>{*v1, *v2};
    }
    case PropertyKind::properly_qc_v: {
      const PointCloud& c = ctx.extremal(xl, y, Mode::max);
      auto v1 = first_uncovered(c, ctx.extremal(x1, y, Mode::max), cone, Inclusion::minus);
      if (!v1) return std::nullopt;
      auto v2 = first_uncovered(c, ctx.extremal(x2, y, Mode::max), cone, Inclusion::minus);
      if (!v2) return std::nullopt;
      return std::vector<Vec>{*v1, *v2};
    }
    case PropertyKind::naturally_qc_iii:
    case PropertyKind::s_qc: {
      auto v = first_uncovered(prepared, min_target(ctx, xl, y), cone, Inclusion::plus);
      if (!v) return std::nullopt;
      return std::vector<Vec>{*v};
    }
    case PropertyKind::naturally_qc_v: {
      auto v = first_uncovered(ctx.extremal(xl, y, Mode::max), prepared, cone,
                               Inclusion::minus);
      if (!v) return std::nullopt;
      return std::vector<Vec>{*v};
    }
    case PropertyKind::natural_qc_scalar: {
      const auto a = ctx.values(x1, y)[0];
      const auto b = ctx.values(x2, y)[0];
      const auto c = ctx.values(xl, y)[0];
      const int steps = ctx.config().coeff_steps;
      Vec mix(a.size());
      for (int k = 0; k <= steps; ++k) {
        const double mu = static_cast<double>(k) / steps;
        for (std::size_t d = 0; d < a.size(); ++d) mix[d] = mu * a[d] + (1.0 - mu) * b[d];
        if (cone.dominates(mix, c)) return std::nullopt;
      }
      return std::vector<Vec>{Vec(c.begin(), c.end())};
    }
    default:
      throw InvalidInput("not a pairwise single-map property");
  }
}

/// Samples of every F(x_i, y) that lie in all the other F(x_j, y), in scan order.
std::vector<Vec> common_points(EvalContext& ctx, const std::vector<int>& ids, int y) {
  const double tol = ctx.cone().eps_cone();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const PointCloud& s = ctx.values(ids[i], y);
    for (std::size_t k = 0; k < s.size(); ++k) {
      bool common = true;
      for (std::size_t j = 0; j < ids.size() && common; ++j)
        common = j == i || ctx.region(ids[j], y).contains(s[k], tol);
      if (common) out.emplace_back(s[k].begin(), s[k].end());
    }
  }
  return out;
}

/// First common point that escapes F(x_lambda, y).
std::optional<Vec> qc_violation(EvalContext& ctx, const std::vector<Vec>& common, int xl,
                                int y) {
  const double tol = ctx.cone().eps_cone();
  const ValueSet& target = ctx.region(xl, y);
  for (const auto& p : common)
    if (!target.contains(p, tol)) return p;
  return std::nullopt;
}

void require_single_valued(const SetValuedFixture& fx, PropertyKind kind) {
  if (needs_single_valued(kind) && !fx.single_valued())
    throw InvalidInput(to_string(kind) + " needs a single-valued fixture; '" +
                       fx.name() + "' is set-valued");
}

}  // namespace

Verdict check_single_map(const SetValuedFixture& fx, const Cone& cone,
                         const PropertySpec& spec, const CheckOptions& opt) {
  require_single_valued(fx, spec.kind);
  Verdict out = blank_verdict(fx, cone, spec, opt.cfg);
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  const int m = ctx.first_grid_size();
  const int slices = ctx.second_grid_size();
  long long tuples = 0, checks = 0;

  auto refute = [&](std::vector<int> ids, int y, const Vec& lambda,
                    std::vector<Vec> values) {
    out.status = Status::refuted;
    out.witness.x = points_of(ctx, ids);
    out.witness.y = {ctx.second_point(y)};
    out.witness.lambda = lambda;
    out.witness.values = std::move(values);
  };

  if (spec.kind == PropertyKind::qc) {
    for (int y = 0; y < slices && out.status != Status::refuted; ++y) {
      for (int n = 2; n <= opt.cfg.n_max && out.status != Status::refuted; ++n) {
        const LambdaGrid& lg = lambda_grid(n, opt.cfg.lambda_steps);
        for_each_tuple(m, n, [&](const std::vector<int>& ids) {
          ++tuples;
          const auto xs = points_of(ctx, ids);
          const std::vector<Vec> common = common_points(ctx, ids, y);
          for (std::size_t l = 0; l < lg.lambdas.size(); ++l) {
            if (!lg.interior[l]) continue;
            ++checks;
            const int xl = ctx.first_id(combine(xs, lg.lambdas[l]));
            if (auto v = qc_violation(ctx, common, xl, y)) {
              refute(ids, y, lg.lambdas[l], {*v});
              return false;
            }
          }
          return true;
        });
      }
    }
  } else {
    const LambdaGrid& lg = lambda_grid(2, opt.cfg.lambda_steps);
    for (int y = 0; y < slices && out.status != Status::refuted; ++y) {
      for_each_tuple(m, 2, [&](const std::vector<int>& ids) {
        ++tuples;
        const auto xs = points_of(ctx, ids);
        const PointCloud prepared = prepare(ctx, spec.kind, ids[0], ids[1], y);
        for (std::size_t l = 0; l < lg.lambdas.size(); ++l) {
          if (!lg.interior[l]) continue;
          ++checks;
          const int xl = ctx.first_id(combine(xs, lg.lambdas[l]));
          if (auto v = pair_violation(ctx, spec.kind, ids[0], ids[1], xl, y, prepared)) {
            refute(ids, y, lg.lambdas[l], std::move(*v));
            return false;
          }
        }
        return true;
      });
    }
  }
  out.coverage["slices"] = slices;
  out.coverage["tuples"] = tuples;
  out.coverage["lambda_checks"] = checks;
  return out;
}

bool replay_single_map(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                       const CheckOptions& opt) {
  if (v.status != Status::refuted) return false;
  const Witness& w = v.witness;
  if (w.x.size() < 2 || w.y.size() != 1 || w.lambda.size() != w.x.size()) return false;
  EvalContext ctx(oriented_view(fx, v.property), cone, opt.cfg);
  std::vector<int> ids;
  for (const auto& x : w.x) ids.push_back(ctx.first_id(x));
  const int y = ctx.second_id(w.y[0]);
  const int xl = ctx.first_id(combine(w.x, w.lambda));
  if (v.property.kind == PropertyKind::qc) return qc_violation(ctx, common_points(ctx, ids, y), xl, y).has_value();
  const PointCloud prepared = prepare(ctx, v.property.kind, ids[0], ids[1], y);
  return pair_violation(ctx, v.property.kind, ids[0], ids[1], xl, y, prepared).has_value();
}

}  // namespace conemm::detail
