// Invariant suites with hand-rolled generators over fixtures, cones and grids.
#include <gtest/gtest.h>

#include "conemm/config.hpp"
#include "conemm/fixture_library.hpp"
#include "conemm/minimax.hpp"
#include "conemm/report.hpp"
#include "conemm/theorem_suite.hpp"
#include "support.hpp"

namespace conemm {
namespace {

std::optional<Verdict> try_check(const SetValuedFixture& fx, const Cone& cone,
                                 const PropertySpec& spec, const CheckOptions& opt) {
  try {
    return check_property(fx, cone, spec, opt);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

Cone default_cone(const std::string& fixture, const ToleranceConfig& cfg) {
  return parse_cone_spec(fixture_info(fixture).default_cone, cfg.eps_cone, cfg.eps_interior);
}

// Negating the map and flipping the polarity flag describe the same condition.
class PolarityDuality : public ::testing::TestWithParam<std::string> {};

TEST_P(PolarityDuality, ConcaveFlagMatchesNegatedMap) {
  const ToleranceConfig cfg = test::small_config(8);
  const CheckOptions opt = test::options(cfg);
  const auto fx = make_fixture(GetParam(), cfg.fixture_params());
  const auto neg = test::negated_fixture(fx);
  const Cone cone = default_cone(GetParam(), cfg);
  int compared = 0;
  for (auto kind : all_property_kinds()) {
    if (kind == PropertyKind::weakly_z) continue;  // targets live in different half-spaces
    for (auto arg : {Arg::first, Arg::second}) {
      const PropertySpec concave{kind, arg, Polarity::concave};
      const PropertySpec convex{kind, arg, Polarity::convex};
      const auto a = try_check(fx, cone, concave, opt);
      const auto b = try_check(neg, cone, convex, opt);
      ASSERT_EQ(a.has_value(), b.has_value()) << concave.id();
      if (!a) continue;
      ++compared;
      EXPECT_EQ(a->status, b->status) << GetParam() << " " << concave.id();
      EXPECT_EQ(a->witness.x, b->witness.x) << GetParam() << " " << concave.id();
      EXPECT_EQ(a->witness.y, b->witness.y) << GetParam() << " " << concave.id();
    }
  }
  EXPECT_GT(compared, 0);
}

INSTANTIATE_TEST_SUITE_P(AllFixtures, PolarityDuality,
                         ::testing::ValuesIn(builtin_fixture_names()),
                         [](const auto& info) { return info.param; });

TEST(ConstantMaps, EveryConvexityKindHolds) {
  const ToleranceConfig cfg = test::small_config(8);
  const CheckOptions opt = test::options(cfg);
  for (const char* name : {"const_A0", "const_B0"}) {
    const auto fx = make_fixture(name, cfg.fixture_params());
    const Cone cone = default_cone(name, cfg);
    for (auto kind : all_property_kinds()) {
      if (!test::convexity_kind(kind)) continue;
      for (auto arg : {Arg::first, Arg::second})
        for (auto pol : {Polarity::convex, Polarity::concave}) {
          const PropertySpec spec{kind, arg, pol};
          const auto v = try_check(fx, cone, spec, opt);
          if (!v) continue;
          EXPECT_FALSE(is_failure(v->status)) << name << " " << spec.id() << " "
                                              << v->to_json().dump();
        }
    }
  }
}

TEST(GraphToReweighting, ConvexGraphImpliesIdentityWitness) {
  const ToleranceConfig cfg = test::small_config(8);
  CheckOptions ident = test::options(cfg);
  ident.family = GCurveFamily::identity_only();
  int implied = 0;
  auto names = builtin_fixture_names();
  for (const auto& n : auxiliary_fixture_names()) names.push_back(n);
  for (const auto& name : names) {
    const auto fx = make_fixture(name, cfg.fixture_params());
    const Cone cone = default_cone(name, cfg);
    for (auto pol : {Polarity::convex, Polarity::concave}) {
      const auto g = try_check(fx, cone, {PropertyKind::wcg, Arg::first, pol}, ident);
      if (!g || g->status != Status::not_refuted) continue;
      const auto w = try_check(fx, cone, {PropertyKind::wnq, Arg::first, pol}, ident);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(w->status, Status::confirmed) << name;
      ++implied;
    }
  }
  EXPECT_GT(implied, 0);
}

// Refutations found on a grid survive refinement: the coarse lattice sits in the fine one.
TEST(NestedGrids, RefutationsPersistFrom25To50) {
  ToleranceConfig coarse;
  coarse.grid_resolution = 25;
  ToleranceConfig fine;
  fine.grid_resolution = 50;
  int refuted = 0;
  for (const auto& e : example_matrix()) {
    if (e.kind != ReportEntry::Kind::property) continue;
    const auto spec = PropertySpec::parse(e.id);
    if (is_existential(spec.kind)) continue;
    const Cone cone = parse_cone_spec(e.cone);
    const auto fx25 = make_fixture(e.fixture, coarse.fixture_params());
    const Verdict v = check_property(fx25, cone, spec, test::options(coarse));
    if (v.status != Status::refuted) continue;
    ++refuted;
    const auto fx50 = make_fixture(e.fixture, fine.fixture_params());
    EXPECT_TRUE(replay(v, fx50, cone, test::options(fine))) << e.fixture << " " << e.id;
  }
  EXPECT_EQ(refuted, 4);
}

TEST(Replay, EveryDecisiveVerdictOnCoarseMatrixReplays) {
  const RunReport r = run_matrix(example_matrix(), test::small_config(12), false);
  const nlohmann::json report = r.to_json();
  int decisive = 0;
  for (const auto& c : report.at("checks")) {
    if (c.at("kind") != "property") continue;
    const std::string st = c.at("status");
    if (st != "Refuted" && st != "Confirmed") continue;
    ++decisive;
    EXPECT_EQ(c.at("detail").value("replayed", false), true) << c.dump();
  }
  EXPECT_GT(decisive, 5);
}

std::vector<std::string> square_fixtures() {
  std::vector<std::string> out;
  auto names = builtin_fixture_names();
  for (const auto& n : auxiliary_fixture_names()) names.push_back(n);
  for (const auto& n : names)
    if (make_fixture(n, FixtureParams{8, 21, 5}).square()) out.push_back(n);
  return out;
}

TEST(DiagonalChain, WitnessYieldsCertificate) {
  const ToleranceConfig cfg = test::small_config(20);
  int chained = 0;
  for (const auto& name : square_fixtures()) {
    const auto fx = make_fixture(name, cfg.fixture_params());
    const Cone cone = default_cone(name, cfg);
    if (!find_diagonal_witness(fx, cone, DiagonalMode::max_w_side, cfg)) continue;
    ++chained;
    const auto c = verify_minimax(fx, cone, Conclusion::pair_i, cfg);
    EXPECT_TRUE(c.holds) << name;
    EXPECT_TRUE(validate_certificate(c, cone)) << name;
  }
  EXPECT_GT(chained, 3);
}

TEST(Certificates, SelfValidateOnEverySquareFixture) {
  const ToleranceConfig cfg = test::small_config(12);
  test::CloudGen gen(31);
  for (const auto& name : square_fixtures()) {
    const auto fx = make_fixture(name, cfg.fixture_params());
    const Cone cone = default_cone(name, cfg);
    for (auto c : {Conclusion::pair_i, Conclusion::pair_ii, Conclusion::inclusion_i,
                   Conclusion::inclusion_ii}) {
      auto cert = verify_minimax(fx, cone, c, cfg);
      EXPECT_EQ(validate_certificate(cert, cone), cert.holds) << name << " " << to_string(c);
      if (!cert.holds || !cert.z1) continue;
      // Moving z1 off its home set must break validation.
      Vec moved = *cert.z1;
      moved[gen.uniform(0, static_cast<int>(moved.size()) - 1)] += 0.37;
      cert.z1 = moved;
      EXPECT_FALSE(validate_certificate(cert, cone)) << name << " " << to_string(c);
    }
  }
}

TEST(MirrorSymmetry, SecondFormsMatchFirstFormsOnMirror) {
  const ToleranceConfig cfg = test::small_config(12);
  for (const auto& name : square_fixtures()) {
    const auto fx = make_fixture(name, cfg.fixture_params());
    const auto mir = test::mirrored_fixture(fx);
    const Cone cone = default_cone(name, cfg);
    const auto a = verify_minimax(fx, cone, Conclusion::pair_ii, cfg);
    const auto b = verify_minimax(mir, cone, Conclusion::pair_i, cfg);
    EXPECT_EQ(a.holds, b.holds) << name;
    // Disc samples of -F and F differ in the last bits, so compare as sets.
    EXPECT_LT(hausdorff_distance(a.z1_home.extremal, b.z1_home.extremal.negated()), 1e-9)
        << name;
    EXPECT_LT(hausdorff_distance(a.z2_home.extremal, b.z2_home.extremal.negated()), 1e-9)
        << name;
    const auto c = verify_minimax(fx, cone, Conclusion::inclusion_ii, cfg);
    const auto d = verify_minimax(mir, cone, Conclusion::inclusion_i, cfg);
    EXPECT_EQ(c.holds, d.holds) << name;
  }
}

TEST(Determinism, MatrixReportIsStable) {
  const ToleranceConfig cfg = test::small_config(8);
  EXPECT_EQ(run_matrix(example_matrix(), cfg, false).render("json"),
            run_matrix(example_matrix(), cfg, false).render("json"));
}

}  // namespace
}  // namespace conemm
