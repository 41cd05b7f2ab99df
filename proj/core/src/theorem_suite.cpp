#include "conemm/theorem_suite.hpp"

#include "conemm/eval_context.hpp"

namespace conemm {
namespace {

using K = PropertyKind;

PropertySpec p(K kind, Arg arg = Arg::first, Polarity pol = Polarity::convex) {
  return {kind, arg, pol};
}

constexpr Arg first = Arg::first;
constexpr Arg second = Arg::second;
constexpr Polarity convex = Polarity::convex;
constexpr Polarity concave = Polarity::concave;

std::vector<TheoremInfo> registry() {
  std::vector<TheoremInfo> r;
  r.reserve(32);  // add() hands out pointers into r
  auto add = [&](std::string id, Conclusion c, std::vector<PropertySpec> hyp) {
    TheoremInfo t;
    t.id = std::move(id);
    t.conclusion = c;
    t.hypotheses = std::move(hyp);
    r.push_back(std::move(t));
    return &r.back();
  };
  const Conclusion ci = Conclusion::pair_i, cii = Conclusion::pair_ii;

  auto* t = add("thm41_i", ci,
                {p(K::transfer_mu_v, first, convex), p(K::pair_properly_iii, second, concave),
                 p(K::naturally_qc_iii, first, concave)});
  t->supplementary = {p(K::transfer_weak_mu_v, first, convex)};
  t->needs_simplex = true;
  t = add("thm41_ii", cii,
          {p(K::transfer_mu_v, second, concave), p(K::pair_properly_iii, first, convex),
           p(K::naturally_qc_iii, second, convex)});
  t->supplementary = {p(K::transfer_weak_mu_v, second, concave)};
  t->needs_simplex = true;

  add("thm42_i", ci,
      {p(K::alpha), p(K::pair_properly_iii, second, concave),
       p(K::naturally_qc_iii, first, concave)})
      ->needs_simplex = true;
  add("thm42_ii", cii,
      {p(K::alpha_prime), p(K::pair_properly_iii, first, convex),
       p(K::naturally_qc_iii, second, convex)})
      ->needs_simplex = true;

  for (auto* c : {add("cor41_i", ci,
                      {p(K::pair_properly_iii, second, concave),
                       p(K::naturally_qc_iii, first, concave)}),
                  add("cor41_ii", cii,
                      {p(K::pair_properly_iii, first, convex),
                       p(K::naturally_qc_iii, second, convex)})}) {
    c->needs_simplex = true;
    c->real_valued = true;
  }
  for (auto* c : {add("cor42_i", ci,
                      {p(K::transfer_mu_scalar, first, convex),
                       p(K::pair_properly_scalar, second, concave),
                       p(K::natural_qc_scalar, first, concave)}),
                  add("cor42_ii", cii,
                      {p(K::transfer_mu_scalar, second, concave),
                       p(K::pair_properly_scalar, first, convex),
                       p(K::natural_qc_scalar, second, convex)})}) {
    c->needs_simplex = true;
    c->single_valued = true;
  }

  add("thm43_i", ci,
      {p(K::transfer_weak_mu_v, first, convex), p(K::transfer_properly_iii, first, concave),
       p(K::gamma)});
  add("thm43_ii", cii,
      {p(K::transfer_weak_mu_v, second, concave),
       p(K::transfer_properly_iii, second, convex), p(K::gamma_prime)});
  add("thm44_i", ci,
      {p(K::alpha), p(K::transfer_properly_iii, first, concave), p(K::gamma)});
  add("thm44_ii", cii,
      {p(K::alpha_prime), p(K::transfer_properly_iii, second, convex), p(K::gamma_prime)});
  add("cor43_i", ci, {p(K::transfer_properly_iii, first, concave), p(K::gamma)})
      ->real_valued = true;
  add("cor43_ii", cii, {p(K::transfer_properly_iii, second, convex), p(K::gamma_prime)})
      ->real_valued = true;

  const PropertySpec wz_i = p(K::weakly_z, first, convex);
  const PropertySpec wz_ii = p(K::weakly_z, second, concave);
  for (auto [id, c, spec, single] :
       {std::tuple{"thm45", Conclusion::inclusion_i, wz_i, false},
        std::tuple{"cor44", Conclusion::inclusion_i, wz_i, true},
        std::tuple{"thm46", Conclusion::inclusion_ii, wz_ii, false},
        std::tuple{"cor45", Conclusion::inclusion_ii, wz_ii, true}}) {
    t = add(id, c, {spec});
    t->row_condition = true;
    t->needs_simplex = true;
    t->single_valued = single;
  }
  return r;
}

const std::vector<TheoremInfo>& theorems() {
  static const std::vector<TheoremInfo> r = registry();
  return r;
}

/// Targets of the inclusion theorems lie in Max F(x, X) - S for every x of
/// the view (the first form on F, the second on its mirror).
HypothesisResult row_condition(const FixtureView& view, const Cone& cone,
                               const CheckOptions& opt) {
  HypothesisResult h;
  h.id = "row_condition";
  h.status = Status::confirmed;
  const std::vector<Vec> targets =
      opt.z_set.empty() ? default_weakly_z_targets(view, cone, opt.cfg) : opt.z_set;
  PointCloud zs(cone.dim());
  for (const auto& z : targets) zs.push_back(z);
  EvalContext ctx(view, cone, opt.cfg);
  for (int x = 0; x < ctx.first_grid_size(); ++x) {
    auto miss = first_uncovered(zs, ctx.row_extremal(x, ExtremalMode::max), cone,
                                Inclusion::minus);
    if (!miss) continue;
    h.status = Status::not_confirmed;
    h.witness.x = {ctx.first_point(x)};
    h.witness.values = {*miss};
    h.witness.note = "target outside F(x, X) - S";
    break;
  }
  return h;
}

HypothesisResult run_property(const SetValuedFixture& fx, const Cone& cone,
                              const PropertySpec& spec, const CheckOptions& opt) {
  HypothesisResult h;
  h.id = spec.id();
  Verdict v = check_property(fx, cone, spec, opt);
  h.status = v.status;
  if (v.status == Status::refuted || v.status == Status::confirmed)
    h.replayed = replay(v, fx, cone, opt);
  h.verdict = std::move(v);
  return h;
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& t : theorems()) out.push_back(t.id);
  return out;
}

TheoremInfo theorem_info(const std::string& id) {
  for (const auto& t : theorems())
    if (t.id == id) return t;
  throw InvalidInput("unknown theorem '" + id + "'");
}

nlohmann::json HypothesisResult::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["status"] = to_string(status);
  j["required"] = required;
  if (verdict) {
    nlohmann::json v = verdict->to_json();
    for (const char* k : {"fixture", "cone", "property", "status", "tolerances"}) v.erase(k);
    j.update(v);
  } else {
    j["witness"] = witness.to_json();
  }
  if (replayed) j["replayed"] = *replayed;
  return j;
}

bool SuiteResult::hypotheses_hold() const {
  for (const auto& h : hypotheses)
    if (h.required && is_failure(h.status)) return false;
  return true;
}

std::string SuiteResult::overall() const {
  if (!hypotheses_hold()) return "hypotheses-not-met";
  return certificate.holds ? "consistent-with-theorem" : "conclusion-missing";
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : hypotheses) hs.push_back(h.to_json());
  return {{"theorem", theorem},
          {"fixture", fixture},
          {"cone", cone},
          {"hypotheses", hs},
          {"certificate", certificate.to_json()},
          {"overall", overall()}};
}

SuiteResult run_theorem_suite(const SetValuedFixture& fx, const Cone& cone,
                              const std::string& theorem_id, const CheckOptions& opt) {
  const TheoremInfo info = theorem_info(theorem_id);
  if (!fx.square())
    throw InvalidInput("theorem '" + theorem_id + "' needs a square two-argument fixture");
  if (info.needs_simplex && fx.first_grid().shape() == DomainGrid::Shape::box)
    throw InvalidInput("theorem '" + theorem_id + "' needs a simplex or interval domain");
  if (info.real_valued && cone.dim() != 1)
    throw InvalidInput("theorem '" + theorem_id + "' needs a real-valued map");
  if (info.single_valued && !fx.single_valued())
    throw InvalidInput("theorem '" + theorem_id + "' needs a single-valued mapping");
  if (cone.dim() != fx.codomain_dim())
    throw InvalidInput("cone dimension does not match the fixture codomain");

  SuiteResult out;
  out.theorem = info.id;
  out.fixture = fx.name();
  out.cone = cone.name().empty() ? cone.describe() : cone.name();
  for (const auto& spec : info.hypotheses)
    out.hypotheses.push_back(run_property(fx, cone, spec, opt));
  for (const auto& spec : info.supplementary) {
    out.hypotheses.push_back(run_property(fx, cone, spec, opt));
    out.hypotheses.back().required = false;
  }
  if (info.row_condition) {
    const FixtureView view = info.conclusion == Conclusion::inclusion_i
                                 ? FixtureView(fx)
                                 : FixtureView(fx).mirror();
    out.hypotheses.push_back(row_condition(view, cone, opt));
  }
  out.certificate = verify_minimax(fx, cone, info.conclusion, opt.cfg);
  return out;
}

}  // namespace conemm
