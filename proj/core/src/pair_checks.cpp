#include <unordered_map>

#include "check_internal.hpp"

namespace conemm::detail {
namespace {

using Mode = ExtremalMode;

/// Point of the disjunct for (x_a, y) at x_lambda that fails, if any.
std::optional<Vec> disjunct_violation(EvalContext& ctx, PropertyKind kind, int xa, int xl,
                                      int y) {
  const Cone& cone = ctx.cone();
  switch (kind) {
    case PropertyKind::pair_properly_iii:
    case PropertyKind::pair_properly_scalar:
      return first_uncovered(ctx.extremal(xa, y, Mode::min), ctx.extremal(xl, y, Mode::min),
                             cone, Inclusion::plus);
    case PropertyKind::pair_properly_v:
      return first_uncovered(ctx.extremal(xl, y, Mode::max), ctx.extremal(xa, y, Mode::max),
                             cone, Inclusion::minus);
    case PropertyKind::pair_properly_plain: {
      const PointCloud& a = ctx.values(xa, y);
      const ValueSet& target = ctx.region(xl, y);
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!target.contains(a[i], cone.eps_cone())) return a.point(i);
      return std::nullopt;
    }
    default:
      throw InvalidInput("not a pair-properly property");
  }
}

class PairEngine {
 public:
  PairEngine(EvalContext& ctx, PropertyKind kind) : ctx_(ctx), kind_(kind) {}

  /// First second-grid y where the disjunct fails, or -1.
  int failing_y(int xa, int xl) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(xa) << 32) | static_cast<std::uint32_t>(xl);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    int hit = -1;
    for (int y = 0; y < ctx_.second_grid_size() && hit < 0; ++y)
      if (disjunct_violation(ctx_, kind_, xa, xl, y)) hit = y;
    cache_.emplace(key, hit);
    return hit;
  }

 private:
  EvalContext& ctx_;
  PropertyKind kind_;
  std::unordered_map<std::uint64_t, int> cache_;
};

void require_kind(const SetValuedFixture& fx, PropertyKind kind) {
  if (kind == PropertyKind::pair_properly_scalar && !fx.single_valued())
    throw InvalidInput("pair_properly_scalar needs a single-valued fixture; '" +
                       fx.name() + "' is set-valued");
  if (fx.arity() != 2)
    throw InvalidInput("pair conditions need a two-argument fixture");
}

}  // namespace

Verdict check_pair_properly(const SetValuedFixture& fx, const Cone& cone,
                            const PropertySpec& spec, const CheckOptions& opt) {
  require_kind(fx, spec.kind);
  Verdict out = blank_verdict(fx, cone, spec, opt.cfg);
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  PairEngine eng(ctx, spec.kind);
  const LambdaGrid& lg = lambda_grid(2, opt.cfg.lambda_steps);
  long long pairs = 0, checks = 0;

  for_each_tuple(ctx.first_grid_size(), 2, [&](const std::vector<int>& ids) {
    ++pairs;
    const auto xs = points_of(ctx, ids);
    for (std::size_t l = 0; l < lg.lambdas.size(); ++l) {
      if (!lg.interior[l]) continue;
      ++checks;
      const int xl = ctx.first_id(combine(xs, lg.lambdas[l]));
      const int y1 = eng.failing_y(ids[0], xl);
      if (y1 < 0) continue;
      const int y2 = eng.failing_y(ids[1], xl);
      if (y2 < 0) continue;
      out.status = Status::refuted;
      out.witness.x = xs;
      out.witness.y = {ctx.second_point(y1), ctx.second_point(y2)};
      out.witness.lambda = lg.lambdas[l];
      out.witness.values = {*disjunct_violation(ctx, spec.kind, ids[0], xl, y1),
                            *disjunct_violation(ctx, spec.kind, ids[1], xl, y2)};
      return false;
    }
    return true;
  });
  out.coverage["pairs"] = pairs;
  out.coverage["lambda_checks"] = checks;
  out.coverage["y"] = ctx.second_grid_size();
  return out;
}

bool replay_pair_properly(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                          const CheckOptions& opt) {
  if (v.status != Status::refuted) return false;
  const Witness& w = v.witness;
  if (w.x.size() != 2 || w.y.size() != 2 || w.lambda.size() != 2) return false;
  const PairDisjuncts d = pair_properly_disjuncts(fx, cone, v.property, w.x[0], w.y[0],
                                                  w.x[1], w.y[1], w.lambda[0], opt);
  return !d.first && !d.second;
}

}  // namespace conemm::detail

namespace conemm {

PairDisjuncts pair_properly_disjuncts(const SetValuedFixture& fx, const Cone& cone,
                                      const PropertySpec& spec, const Coord& x1,
                                      const Coord& y1, const Coord& x2, const Coord& y2,
                                      double lambda, const CheckOptions& opt) {
  detail::require_kind(fx, spec.kind);
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidInput("lambda must lie in [0, 1]");
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  const int a = ctx.first_id(x1);
  const int b = ctx.first_id(x2);
  const int xl = ctx.first_id(combine({x1, x2}, {lambda, 1.0 - lambda}));
  PairDisjuncts d;
  d.first = !detail::disjunct_violation(ctx, spec.kind, a, xl, ctx.second_id(y1));
  d.second = !detail::disjunct_violation(ctx, spec.kind, b, xl, ctx.second_id(y2));
  return d;
}

}  // namespace conemm
