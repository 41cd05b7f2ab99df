#include <gtest/gtest.h>

#include "conemm/config.hpp"
#include "conemm/fixture_library.hpp"
#include "conemm/minimax.hpp"
#include "conemm/theorem_suite.hpp"
#include "support.hpp"

namespace conemm {
namespace {

MinimaxCertificate certify(const std::string& fixture, const std::string& cone, Conclusion c,
                           const ToleranceConfig& cfg = {}) {
  return verify_minimax(make_fixture(fixture, cfg.fixture_params()), parse_cone_spec(cone), c,
                        cfg);
}

TEST(DiagonalWitness, FoundWhereDiagonalMeetsSlice) {
  const auto a = find_diagonal_witness(make_fixture("ex4_2"), Cone::nonneg_reals(),
                                       DiagonalMode::max_w_side);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->meet, Vec{1.0});
  EXPECT_EQ(a->slice.to_vectors(), (std::vector<Vec>{{1.0}}));

  const auto b = find_diagonal_witness(make_fixture("ex4_1"), Cone::nonpos_orthant(2),
                                       DiagonalMode::max_w_side);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->value.sample(101).to_vectors(), (std::vector<Vec>{{0, 0}}));
}

TEST(DiagonalWitness, AbsentWhenDiagonalIsDisjoint) {
  EXPECT_FALSE(find_diagonal_witness(make_fixture("diag_gap"), Cone::nonneg_reals(),
                                     DiagonalMode::max_w_side)
                   .has_value());
}

TEST(DiagonalWitness, NeedsSquareFixture) {
  EXPECT_THROW(find_diagonal_witness(make_fixture("ex2_1"), Cone::nonneg_reals(),
                                     DiagonalMode::max_w_side),
               InvalidInput);
}

TEST(Certificates, ScalarPairs) {
  for (const char* fx : {"ex4_2", "ex4_3"}) {
    const auto c = certify(fx, "Rplus", Conclusion::pair_i);
    ASSERT_TRUE(c.holds) << fx;
    EXPECT_EQ(*c.z1, Vec{1.0});
    EXPECT_EQ(*c.z2, Vec{1.0});
    EXPECT_TRUE(validate_certificate(c, Cone::nonneg_reals()));
    EXPECT_EQ(c.relation.kind, ConeRelation::Kind::in_plus);
  }
}

TEST(Certificates, DisjointDiagonalFails) {
  const auto c = certify("diag_gap", "Rplus", Conclusion::pair_i);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.z1_home.extremal.to_vectors(), (std::vector<Vec>{{0.0}}));
  EXPECT_EQ(c.z2_home.extremal.to_vectors(), (std::vector<Vec>{{1.0}}));
  EXPECT_FALSE(c.missing.empty());
}

TEST(Certificates, InclusionForm) {
  const auto c = certify("ex4_6", "Rplus", Conclusion::inclusion_i);
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(validate_certificate(c, Cone::nonneg_reals()));
  EXPECT_EQ(c.relation.kind, ConeRelation::Kind::subset_minus);
  EXPECT_NE(c.note.find("closures"), std::string::npos);
}

TEST(Certificates, TamperedCertificateRejected) {
  auto c = certify("ex4_2", "Rplus", Conclusion::pair_i);
  ASSERT_TRUE(c.holds);
  c.z1 = Vec{0.5};
  EXPECT_FALSE(validate_certificate(c, Cone::nonneg_reals()));
  auto d = certify("ex4_2", "Rplus", Conclusion::pair_i);
  d.z2_home.extremal = PointCloud::from_points({{0.25}});
  EXPECT_FALSE(validate_certificate(d, Cone::nonneg_reals()));
}

TEST(Certificates, MirroredConclusionsOnNegatedTranspose) {
  // pair_ii on F equals pair_i on -F^T with the same cone, after negation.
  const auto fx = make_fixture("ex4_3");
  const auto neg = test::negated_fixture(fx);
  const auto a = verify_minimax(fx, Cone::nonneg_reals(), Conclusion::pair_ii);
  ASSERT_TRUE(a.z1_home.extremal.size() > 0);
  // ex4_3 is not symmetric, so compare the homes against a direct computation.
  const PointCloud diag = diagonal_union(FixtureView(fx));
  EXPECT_EQ(a.z1_home.extremal, extremal_points(diag, Cone::nonneg_reals(), ExtremalMode::min));
  const auto b = verify_minimax(neg, Cone::nonneg_reals(), Conclusion::pair_i);
  EXPECT_EQ(b.z1_home.extremal.negated().deduplicated(0.0), a.z1_home.extremal);
}

TEST(TheoremRegistry, Listing) {
  const auto ids = theorem_ids();
  EXPECT_EQ(ids.front(), "thm41_i");
  for (const auto& id : ids) {
    const TheoremInfo t = theorem_info(id);
    EXPECT_EQ(t.id, id);
    EXPECT_TRUE(!t.hypotheses.empty() || t.row_condition) << id;
  }
  EXPECT_THROW(theorem_info("thm99"), InvalidInput);
}

TEST(TheoremSuite, CorollaryOnScalarExample) {
  const auto s = run_theorem_suite(make_fixture("ex4_2"), Cone::nonneg_reals(), "cor41_i");
  EXPECT_EQ(s.overall(), "consistent-with-theorem");
  EXPECT_TRUE(s.consistent());
  EXPECT_EQ(*s.certificate.z1, Vec{1.0});
}

TEST(TheoremSuite, RejectsUnsuitableFixtures) {
  EXPECT_THROW(run_theorem_suite(make_fixture("ex2_1"), Cone::nonneg_reals(), "thm41_i"),
               InvalidInput);
  EXPECT_THROW(run_theorem_suite(make_fixture("ex4_1"), Cone::nonpos_orthant(2), "cor41_i"),
               InvalidInput);
  EXPECT_THROW(run_theorem_suite(make_fixture("ex4_2"), Cone::nonneg_reals(), "cor42_i"),
               InvalidInput);
  EXPECT_THROW(run_theorem_suite(make_fixture("ex4_2"), Cone::nonneg_orthant(2), "thm41_i"),
               InvalidInput);
}

TEST(TheoremSuite, DisjointDiagonalReportsFailure) {
  const auto s = run_theorem_suite(make_fixture("diag_gap", test::small_config().fixture_params()),
                                   Cone::nonneg_reals(), "cor41_i",
                                   test::options(test::small_config()));
  EXPECT_FALSE(s.consistent());
  EXPECT_FALSE(s.certificate.holds);
}

}  // namespace
}  // namespace conemm
