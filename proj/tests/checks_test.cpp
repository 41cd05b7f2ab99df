#include <gtest/gtest.h>

#include "conemm/checks.hpp"
#include "conemm/config.hpp"
#include "conemm/fixture_library.hpp"
#include "support.hpp"

namespace conemm {
namespace {

struct Outcome {
  Verdict verdict;
  bool replayed;
};

Outcome run(const std::string& fixture, const std::string& cone, const std::string& property,
        const ToleranceConfig& cfg = {}, std::vector<Vec> z_set = {}) {
  const auto fx = make_fixture(fixture, cfg.fixture_params());
  const Cone c = parse_cone_spec(cone, cfg.eps_cone, cfg.eps_interior);
  CheckOptions opt = test::options(cfg);
  opt.z_set = std::move(z_set);
  Verdict v = check_property(fx, c, PropertySpec::parse(property), opt);
  const bool replayed = (v.status == Status::refuted || v.status == Status::confirmed)
                            ? replay(v, fx, c, opt)
                            : true;
  return {std::move(v), replayed};
}

void expect_status(const Outcome& r, Status want) {
  EXPECT_EQ(r.verdict.status, want) << r.verdict.to_json().dump();
  EXPECT_TRUE(r.replayed) << "witness does not replay: " << r.verdict.to_json().dump();
}

TEST(PropertySpec, ParseAndPrint) {
  const auto s = PropertySpec::parse("transfer_mu_v[second,concave]");
  EXPECT_EQ(s.kind, PropertyKind::transfer_mu_v);
  EXPECT_EQ(s.arg, Arg::second);
  EXPECT_EQ(s.polarity, Polarity::concave);
  EXPECT_EQ(s.id(), "transfer_mu_v[second,concave]");
  EXPECT_EQ(PropertySpec::parse("alpha").id(), "alpha[first,convex]");
  EXPECT_THROW(PropertySpec::parse("nonsense"), InvalidInput);
  EXPECT_THROW(PropertySpec::parse("alpha[third,convex]"), InvalidInput);
  for (auto k : all_property_kinds()) EXPECT_EQ(parse_property_kind(to_string(k)), k);
}

TEST(PropertySpec, ExitCodes) {
  EXPECT_EQ(exit_code(Status::not_refuted), 0);
  EXPECT_EQ(exit_code(Status::confirmed), 0);
  EXPECT_EQ(exit_code(Status::refuted), 1);
  EXPECT_EQ(exit_code(Status::not_confirmed), 1);
}

TEST(SingleMapChecks, SlicesOfTwoBranchMaps) {
  expect_status(run("ex3_7", "Rplus", "naturally_qc_iii[first,concave]"), Status::not_refuted);
  expect_status(run("ex4_1", "minusR2plus", "naturally_qc_iii[first,concave]"),
                Status::not_refuted);
}

TEST(SingleMapChecks, ConstantMapsPassEveryKind) {
  for (const char* k : {"properly_qc_iii", "properly_qc_v", "naturally_qc_iii",
                        "naturally_qc_v", "s_qc", "qc"}) {
    for (const char* pol : {"convex", "concave"}) {
      const std::string id = std::string(k) + "[first," + pol + "]";
      expect_status(run("const_A0", "Rplus", id, test::small_config()), Status::not_refuted);
      expect_status(run("const_B0", "R2plus", id, test::small_config()), Status::not_refuted);
    }
  }
}

TEST(GraphChecks, JumpMapHasNoConvexGraphSelection) {
  const Outcome r = run("ex2_1", "Rplus", "wcg[first,convex]");
  expect_status(r, Status::refuted);
  const auto fx = make_fixture("ex2_1");
  const Verdict at = check_wcg_tuple(fx, Cone::nonneg_reals(), {{1.0}, {3.0}});
  EXPECT_EQ(at.status, Status::refuted);
}

TEST(GraphChecks, ConvexGraphs) {
  expect_status(run("const_A0", "Rplus", "wcg[first,convex]", test::small_config()),
                Status::not_refuted);
  expect_status(run("lin_id", "Rplus", "wcg[first,convex]", test::small_config()),
                Status::not_refuted);
  expect_status(run("const_A0", "Rplus", "wnq[first,convex]", test::small_config()),
                Status::confirmed);
}

TEST(GraphChecks, JumpMapHasReweightingWitness) {
  expect_status(run("ex2_1", "Rplus", "wnq[first,convex]"), Status::confirmed);
}

TEST(TransferChecks, CoarseGridStatuses) {
  const ToleranceConfig cfg = test::small_config(20);
  expect_status(run("ex3_1", "Rplus", "transfer_mu_v[first,convex]", cfg), Status::not_refuted);
  expect_status(run("ex3_4", "Rplus", "transfer_mu_scalar[first,convex]", cfg),
                Status::not_refuted);
  const Outcome r = run("ex3_6", "R2plus", "transfer_mu_v[first,convex]", cfg);
  expect_status(r, Status::refuted);
  ASSERT_EQ(r.verdict.witness.y.size(), 1u);
  EXPECT_EQ(r.verdict.witness.y[0][0], 0.0);
}

TEST(TransferChecks, ScalarFormNeedsSingleValuedMap) {
  EXPECT_THROW(run("ex3_1", "Rplus", "transfer_mu_scalar[first,convex]", test::small_config()),
               InvalidInput);
}

TEST(PairChecks, Statuses) {
  expect_status(run("ex3_2", "R2plus", "pair_properly_v[first,convex]"), Status::refuted);
  expect_status(run("ex3_6", "R2plus", "pair_properly_v[first,convex]", test::small_config(20)),
                Status::not_refuted);
  expect_status(run("ex3_5", "Rplus", "pair_properly_iii[second,concave]"), Status::not_refuted);
}

TEST(PairChecks, ReportedConfigurationFailsBothDisjuncts) {
  const auto fx = make_fixture("ex3_2");
  // x0 = 1/5 is lambda x1 + (1 - lambda) x2 with lambda = 3/11.
  const double lambda = (0.25 - 0.2) / (0.25 - 1.0 / 15);
  const PairDisjuncts at = pair_properly_disjuncts(
      fx, Cone::nonneg_orthant(2), PropertySpec::parse("pair_properly_v"), {1.0 / 15}, {0.9},
      {0.25}, {0.2}, lambda);
  EXPECT_FALSE(at.first);
  EXPECT_FALSE(at.second);
}

TEST(TransferProperly, Statuses) {
  expect_status(run("ex3_7", "Rplus", "transfer_properly_iii[first,concave]"),
                Status::not_refuted);
  expect_status(run("rem4_2", "Rplus", "transfer_properly_iii[first,concave]"),
                Status::refuted);
  for (const char* k : {"transfer_properly_iii", "transfer_properly_v"})
    expect_status(run("const_A0", "Rplus", std::string(k) + "[first,concave]",
                      test::small_config()),
                  Status::not_refuted);
}

TEST(ConditionChecks, Alpha) {
  const Outcome a = run("ex3_1", "Rplus", "alpha[first,convex]");
  expect_status(a, Status::confirmed);
  ASSERT_FALSE(a.verdict.table.empty());
  for (const auto& w : a.verdict.table) EXPECT_EQ(w.values.at(0), Vec{1.0});
  expect_status(run("ex3_2", "R2plus", "alpha[first,convex]"), Status::not_confirmed);
  const Outcome b = run("ex4_1", "minusR2plus", "alpha[first,convex]");
  expect_status(b, Status::confirmed);
  for (const auto& w : b.verdict.table) EXPECT_EQ(w.values.at(0), (Vec{0.0, 0.0}));
}

TEST(ConditionChecks, Gamma) {
  const Outcome g = run("ex3_8", "Rplus", "gamma[first,convex]");
  expect_status(g, Status::confirmed);
  ASSERT_FALSE(g.verdict.witness.y.empty());
  EXPECT_EQ(g.verdict.witness.y.back()[0], 1.0);
  expect_status(run("rem4_2", "Rplus", "gamma[first,convex]"), Status::confirmed);
  expect_status(run("const_A0", "Rplus", "gamma[first,convex]", test::small_config()),
                Status::confirmed);
}

TEST(WeaklyZ, TargetsOnUnitInterval) {
  std::vector<Vec> zs;
  for (int k = 0; k <= 10; ++k) zs.push_back({k / 10.0});
  expect_status(run("ex4_4", "Rplus", "weakly_z[first,convex]", test::small_config(), zs),
                Status::confirmed);
  expect_status(run("const_A0", "Rplus", "weakly_z[first,convex]", test::small_config(), zs),
                Status::confirmed);
}

TEST(Verdicts, JsonCarriesTolerances) {
  const Outcome r = run("ex3_8", "Rplus", "gamma[first,convex]");
  const auto j = r.verdict.to_json();
  EXPECT_EQ(j.at("status"), "Confirmed");
  EXPECT_EQ(j.at("fixture"), "ex3_8");
  EXPECT_TRUE(j.contains("tolerances"));
  EXPECT_EQ(Witness::from_json(r.verdict.witness.to_json()).to_json(),
            r.verdict.witness.to_json());
}

TEST(Verdicts, CorruptedWitnessDoesNotReplay) {
  const auto fx = make_fixture("rem4_2");
  const Cone s = Cone::nonneg_reals();
  Verdict v = check_property(fx, s, PropertySpec::parse("transfer_properly_iii[first,concave]"));
  ASSERT_EQ(v.status, Status::refuted);
  const auto c = make_fixture("const_A0");
  v.fixture = c.name();
  EXPECT_FALSE(replay(v, c, s));
}

}  // namespace
}  // namespace conemm
