#include "conemm/minimax.hpp"

#include <algorithm>

#include "conemm/eval_context.hpp"

namespace conemm {
namespace {

void require_square(const SetValuedFixture& fx) {
  if (!fx.square())
    throw InvalidInput("fixture '" + fx.name() + "' does not have a square domain");
}

nlohmann::json cloud_json(const PointCloud& c) { return c.to_vectors(); }

PointCloud diagonal(EvalContext& ctx) {
  PointCloud out(ctx.value_dim());
  for (int x = 0; x < ctx.first_grid_size(); ++x)
    out.append(ctx.values(x, ctx.second_id(ctx.first_point(x))));
  return out.deduplicated(ctx.cone().eps_cone());
}

/// Union over the first grid of the weakly extremal row sets.
PointCloud slice_union(EvalContext& ctx, ExtremalMode mode) {
  PointCloud out(ctx.value_dim());
  for (int x = 0; x < ctx.first_grid_size(); ++x) out.append(ctx.row_extremal(x, mode));
  return out.deduplicated(ctx.cone().eps_cone());
}

ExtremalHome home(std::string description, PointCloud source, const Cone& cone,
                  ExtremalMode mode) {
  ExtremalHome h;
  h.description = std::move(description);
  h.mode = mode;
  h.extremal = extremal_points(source, cone, mode);
  h.source = std::move(source);
  return h;
}

bool relation_holds(const Vec& a, const Vec& b, const Cone& cone, ConeRelation::Kind kind) {
  return kind == ConeRelation::Kind::in_plus ? cone.dominates(a, b) : cone.dominates(b, a);
}

}  // namespace

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::pair_i: return "pair_i";
    case Conclusion::pair_ii: return "pair_ii";
    case Conclusion::inclusion_i: return "inclusion_i";
    case Conclusion::inclusion_ii: return "inclusion_ii";
  }
  return "?";
}

Conclusion parse_conclusion(std::string_view s) {
  for (Conclusion c : {Conclusion::pair_i, Conclusion::pair_ii, Conclusion::inclusion_i,
                       Conclusion::inclusion_ii})
    if (s == to_string(c)) return c;
  throw InvalidInput("unknown conclusion '" + std::string(s) + "'");
}

std::string to_string(DiagonalMode m) {
  return m == DiagonalMode::max_w_side ? "max_w_side" : "min_w_side";
}

nlohmann::json DiagonalWitness::to_json() const {
  return {{"mode", to_string(mode)},
          {"x", x.vec()},
          {"value", value.describe()},
          {"slice", cloud_json(slice)},
          {"meet", meet}};
}

nlohmann::json ExtremalHome::to_json() const {
  return {{"description", description},
          {"mode", to_string(mode)},
          {"extremal", cloud_json(extremal)},
          {"source_size", source.size()}};
}

std::optional<DiagonalWitness> find_diagonal_witness(const SetValuedFixture& fx,
                                                     const Cone& cone, DiagonalMode mode,
                                                     const ToleranceConfig& cfg) {
  require_square(fx);
  FixtureView view(fx);
  if (mode == DiagonalMode::min_w_side) view = view.transpose();
  const ExtremalMode m =
      mode == DiagonalMode::max_w_side ? ExtremalMode::max_w : ExtremalMode::min_w;
  EvalContext ctx(view, cone, cfg);
  const double tol = cone.eps_cone();
  for (int x = 0; x < ctx.first_grid_size(); ++x) {
    const int y = ctx.second_id(ctx.first_point(x));
    const PointCloud& slice = ctx.row_extremal(x, m);
    const ValueSet& value = ctx.region(x, y);
    const PointCloud& sample = ctx.values(x, y);
    std::optional<Vec> meet;
    for (std::size_t k = 0; k < slice.size() && !meet; ++k)
      if (sample.contains_near(slice[k], tol)) meet = slice.point(k);
    for (std::size_t k = 0; k < slice.size() && !meet; ++k)
      if (value.contains(slice[k], tol)) meet = slice.point(k);
    if (!meet) continue;
    DiagonalWitness w;
    w.mode = mode;
    w.x = ctx.first_point(x);
    w.value = value;
    w.slice = slice;
    w.meet = *meet;
    return w;
  }
  return std::nullopt;
}

MinimaxCertificate verify_minimax(const SetValuedFixture& fx, const Cone& cone,
                                  Conclusion conclusion, const ToleranceConfig& cfg) {
  require_square(fx);
  cfg.validate();
  MinimaxCertificate cert;
  cert.conclusion = conclusion;
  cert.note = "closures dropped: sets are finite grid samples";
  EvalContext rows(FixtureView(fx), cone, cfg);
  const PointCloud diag = diagonal(rows);
  const bool side_i =
      conclusion == Conclusion::pair_i || conclusion == Conclusion::inclusion_i;

  ExtremalHome slices;
  if (side_i) {
    slices = home("Min of the union of Max_w F(x, X)", slice_union(rows, ExtremalMode::max_w),
                  cone, ExtremalMode::min);
  } else {
    EvalContext cols(FixtureView(fx).transpose(), cone, cfg);
    slices = home("Max of the union of Min_w F(X, y)", slice_union(cols, ExtremalMode::min_w),
                  cone, ExtremalMode::max);
  }
  ExtremalHome diag_home =
      side_i ? home("Max of the diagonal union", diag, cone, ExtremalMode::max)
             : home("Min of the diagonal union", diag, cone, ExtremalMode::min);
  cert.diag_witness = find_diagonal_witness(
      fx, cone, side_i ? DiagonalMode::max_w_side : DiagonalMode::min_w_side, cfg);

  cert.relation.eps_cone = cone.eps_cone();
  cert.relation.eps_interior = cone.eps_interior();
  if (conclusion == Conclusion::pair_i || conclusion == Conclusion::pair_ii) {
    const auto kind =
        side_i ? ConeRelation::Kind::in_plus : ConeRelation::Kind::in_minus;
    cert.relation.kind = kind;
    cert.z1_home = std::move(diag_home);
    cert.z2_home = std::move(slices);
    auto sorted = [](const PointCloud& c) {
      auto v = c.to_vectors();
      std::sort(v.begin(), v.end());
      return v;
    };
    const auto z1s = sorted(cert.z1_home.extremal);
    const auto z2s = sorted(cert.z2_home.extremal);
    for (const auto& a : z1s) {
      for (const auto& b : z2s) {
        if (!relation_holds(a, b, cone, kind)) continue;
        cert.z1 = a;
        cert.z2 = b;
        break;
      }
      if (cert.z1) break;
    }
    if (cert.z1) {
      cert.relation.lhs = PointCloud::singleton(*cert.z1);
      cert.relation.rhs = PointCloud::singleton(*cert.z2);
      cert.holds = cert.relation.evaluate(cone);
    } else {
      cert.relation.lhs = cert.z1_home.extremal;
      cert.relation.rhs = cert.z2_home.extremal;
      cert.missing = z1s;
    }
    return cert;
  }

  cert.relation.kind =
      side_i ? ConeRelation::Kind::subset_minus : ConeRelation::Kind::subset_plus;
  cert.z1_home = std::move(slices);
  cert.z2_home = std::move(diag_home);
  cert.relation.lhs = cert.z1_home.extremal;
  cert.relation.rhs = cert.z2_home.extremal;
  const auto rel = side_i ? ConeRelation::Kind::in_minus : ConeRelation::Kind::in_plus;
  const PointCloud& lhs = cert.relation.lhs;
  const PointCloud& rhs = cert.relation.rhs;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    bool ok = false;
    for (std::size_t j = 0; j < rhs.size() && !ok; ++j)
      ok = relation_holds(lhs.point(i), rhs.point(j), cone, rel);
    if (!ok) cert.missing.push_back(lhs.point(i));
  }
  cert.holds = cert.missing.empty() && cert.relation.evaluate(cone);
  return cert;
}

bool validate_certificate(const MinimaxCertificate& cert, const Cone& cone) {
  if (!cert.holds) return false;
  const double tol = cone.eps_cone();
  auto home_ok = [&](const ExtremalHome& h) {
    const PointCloud recomputed = extremal_points(h.source, cone, h.mode);
    return hausdorff_distance(recomputed, h.extremal) <= tol;
  };
  if (!home_ok(cert.z1_home) || !home_ok(cert.z2_home)) return false;
  if (cert.z1 && !cert.z1_home.extremal.contains_near(*cert.z1, tol)) return false;
  if (cert.z2 && !cert.z2_home.extremal.contains_near(*cert.z2, tol)) return false;
  if (!cert.relation.evaluate(cone)) return false;
  if (cert.diag_witness) {
    const auto& w = *cert.diag_witness;
    if (!w.value.contains(w.meet, tol) || !w.slice.contains_near(w.meet, tol)) return false;
  }
  return true;
}

nlohmann::json MinimaxCertificate::to_json() const {
  nlohmann::json j;
  j["conclusion"] = to_string(conclusion);
  j["holds"] = holds;
  if (z1) j["z1"] = *z1;
  if (z2) j["z2"] = *z2;
  j["relation"] = {{"kind", to_string(relation.kind)},
                   {"lhs", cloud_json(relation.lhs)},
                   {"rhs", cloud_json(relation.rhs)}};
  j["z1_home"] = z1_home.to_json();
  j["z2_home"] = z2_home.to_json();
  if (diag_witness) j["diag_witness"] = diag_witness->to_json();
  if (!missing.empty()) j["missing"] = missing;
  j["note"] = note;
  return j;
}

}  // namespace conemm
