#include <map>
#include <mutex>

#include "check_internal.hpp"

namespace conemm {
namespace detail {

Verdict blank_verdict(const SetValuedFixture& fx, const Cone& cone,
                      const PropertySpec& spec, const ToleranceConfig& cfg) {
  Verdict v;
  v.fixture = fx.name();
  v.cone = cone.name().empty() ? cone.describe() : cone.name();
  v.property = spec;
  v.status = is_existential(spec.kind) ? Status::confirmed : Status::not_refuted;
  v.tolerances = cfg;
  return v;
}

bool for_each_tuple(int m, int n, const std::function<bool(const std::vector<int>&)>& fn) {
  if (n <= 0 || n > m) return true;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    int i = n - 1;
    while (i >= 0 && idx[i] == m - n + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

const LambdaGrid& lambda_grid(int n, int steps) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, LambdaGrid> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({n, steps});
  if (it != cache.end()) return it->second;
  LambdaGrid g;
  g.lambdas = n == 1 ? std::vector<Vec>{Vec{1.0}} : simplex_lattice(n, steps);
  for (const auto& l : g.lambdas) {
    int last = 0;
    bool interior = true;
    for (int i = 0; i < n; ++i) {
      if (l[i] > 0.0) last = i;
      interior = interior && l[i] > 0.0;
    }
    g.last.push_back(last);
    g.interior.push_back(interior ? 1 : 0);
  }
  return cache.emplace(std::make_pair(n, steps), std::move(g)).first->second;
}

std::vector<Coord> points_of(const EvalContext& ctx, const std::vector<int>& ids) {
  std::vector<Coord> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(ctx.first_point(id));
  return out;
}

std::vector<std::shared_ptr<const GCurve>> ordered_curves(const GCurveFamily& family,
                                                          int n) {
  auto all = family.curves_for(n);
  std::vector<std::shared_ptr<const GCurve>> out;
  for (const auto& c : all)
    if (c->name() != "identity" && c->name() != "power") out.push_back(c);
  for (const auto& c : all)
    if (c->name() == "identity" || c->name() == "power") out.push_back(c);
  return out;
}

GCurveFamily effective_family(const SetValuedFixture& fx, const CheckOptions& opt) {
  if (opt.family) return *opt.family;
  GCurveFamily f = GCurveFamily::standard();
  for (const auto& c : fx.witness_curves()) f.register_curve(c);
  return f;
}

}  // namespace detail

using namespace detail;

Verdict check_property(const SetValuedFixture& fx, const Cone& cone,
                       const PropertySpec& spec, const CheckOptions& opt) {
  opt.cfg.validate();
  if (opt.cfg.n_max > StrategyRow::kMaxTuple)
    throw InvalidInput("n_max above " + std::to_string(StrategyRow::kMaxTuple) +
                       " is not supported");
  if (cone.dim() != fx.codomain_dim())
    throw InvalidInput("cone dimension does not match fixture '" + fx.name() + "'");
  switch (spec.kind) {
    case PropertyKind::wcg:
    case PropertyKind::wnq:
      return check_graph(fx, cone, spec, opt);
    case PropertyKind::transfer_mu_v:
    case PropertyKind::transfer_mu_iii:
    case PropertyKind::transfer_weak_mu_v:
    case PropertyKind::transfer_weak_mu_iii:
    case PropertyKind::transfer_mu_scalar:
      return check_transfer_mu(fx, cone, spec, opt);
    case PropertyKind::pair_properly_iii:
    case PropertyKind::pair_properly_v:
    case PropertyKind::pair_properly_plain:
    case PropertyKind::pair_properly_scalar:
      return check_pair_properly(fx, cone, spec, opt);
    case PropertyKind::transfer_properly_iii:
    case PropertyKind::transfer_properly_v:
      return check_transfer_properly(fx, cone, spec, opt);
    case PropertyKind::alpha:
    case PropertyKind::alpha_prime:
      return check_alpha(fx, cone, spec, opt);
    case PropertyKind::gamma:
    case PropertyKind::gamma_prime:
      return check_gamma(fx, cone, spec, opt);
    case PropertyKind::weakly_z:
      return check_weakly_z(fx, cone, spec, opt);
    default:
      return check_single_map(fx, cone, spec, opt);
  }
}

bool replay(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
            const CheckOptions& opt) {
  if (v.status == Status::not_refuted || v.status == Status::not_confirmed) return false;
  switch (v.property.kind) {
    case PropertyKind::wcg:
    case PropertyKind::wnq:
      return replay_graph(v, fx, cone, opt);
    case PropertyKind::transfer_mu_v:
    case PropertyKind::transfer_mu_iii:
    case PropertyKind::transfer_weak_mu_v:
    case PropertyKind::transfer_weak_mu_iii:
    case PropertyKind::transfer_mu_scalar:
      return replay_transfer_mu(v, fx, cone, opt);
    case PropertyKind::pair_properly_iii:
    case PropertyKind::pair_properly_v:
    case PropertyKind::pair_properly_plain:
    case PropertyKind::pair_properly_scalar:
      return replay_pair_properly(v, fx, cone, opt);
    case PropertyKind::transfer_properly_iii:
    case PropertyKind::transfer_properly_v:
      return replay_transfer_properly(v, fx, cone, opt);
    case PropertyKind::alpha:
    case PropertyKind::alpha_prime:
      return replay_alpha(v, fx, cone, opt);
    case PropertyKind::gamma:
    case PropertyKind::gamma_prime:
      return replay_gamma(v, fx, cone, opt);
    case PropertyKind::weakly_z:
      return replay_weakly_z(v, fx, cone, opt);
    default:
      return replay_single_map(v, fx, cone, opt);
  }
}

}  // namespace conemm
