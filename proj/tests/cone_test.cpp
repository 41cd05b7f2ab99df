#include <gtest/gtest.h>

#include "conemm/config.hpp"
#include "conemm/cone.hpp"
#include "support.hpp"

namespace conemm {
namespace {

Vec v(std::initializer_list<double> xs) { return Vec(xs); }

TEST(Cone, ScalarMembership) {
  const Cone s = Cone::nonneg_reals();
  EXPECT_TRUE(cone_contains(s, v({0.5})));
  EXPECT_TRUE(cone_contains(s, v({0.0})));
  EXPECT_FALSE(cone_contains(s, v({-0.1})));
  EXPECT_FALSE(cone_contains(s, v({0.0}), true));
  EXPECT_TRUE(cone_contains(s, v({0.1}), true));
}

TEST(Cone, OrthantMembership) {
  EXPECT_FALSE(cone_contains(Cone::nonneg_orthant(2), v({0.5, -0.5})));
  EXPECT_TRUE(cone_contains(Cone::nonneg_orthant(2), v({0.5, 0.0})));
  const Cone neg = Cone::nonpos_orthant(2);
  EXPECT_FALSE(cone_contains(neg, v({0.0, 0.0}), true));
  EXPECT_TRUE(cone_contains(neg, v({0.0, 0.0})));
  EXPECT_TRUE(cone_contains(neg, v({-1.0, -2.0}), true));
}

TEST(Cone, DimensionMismatchRejected) {
  EXPECT_THROW(cone_contains(Cone::nonneg_orthant(2), v({1.0})), InvalidInput);
  EXPECT_THROW(Cone::nonneg_reals().dominates(v({1.0, 2.0}), v({0.0})), InvalidInput);
}

TEST(Cone, ToleranceRelaxesClosedTest) {
  const Cone tight = Cone::nonneg_reals().with_tolerances(0.0, 1e-9);
  const Cone loose = Cone::nonneg_reals().with_tolerances(1e-6, 1e-9);
  EXPECT_FALSE(tight.contains(v({-1e-7})));
  EXPECT_TRUE(loose.contains(v({-1e-7})));
}

TEST(Cone, NamedAndInlineSpecsAgree) {
  const Cone a = parse_cone_spec("R2plus");
  const Cone b = parse_cone_spec("[[1,0],[0,1]]");
  const Cone c = parse_cone_spec("minusR2plus");
  for (double x : {-1.0, -0.25, 0.0, 0.5}) {
    for (double y : {-0.5, 0.0, 0.75}) {
      EXPECT_EQ(a.contains(v({x, y})), b.contains(v({x, y})));
      EXPECT_EQ(c.contains(v({x, y})), a.contains(v({-x, -y})));
    }
  }
  EXPECT_THROW(parse_cone_spec("R7plus"), InvalidInput);
  EXPECT_THROW(parse_cone_spec("[[1,0],[0]]"), InvalidInput);
}

TEST(Cone, NegatedSwapsDominance) {
  const Cone s = Cone::nonneg_orthant(2);
  const Cone n = s.negated();
  EXPECT_TRUE(s.dominates(v({1, 1}), v({0, 0})));
  EXPECT_FALSE(n.dominates(v({1, 1}), v({0, 0})));
  EXPECT_TRUE(n.dominates(v({0, 0}), v({1, 1})));
}

TEST(Cone, BuiltinsArePointed) {
  for (const char* name : {"Rplus", "R2plus", "minusR2plus", "R3plus"})
    EXPECT_TRUE(Cone::from_name(name).is_pointed_sampled(64)) << name;
}

TEST(Cone, WedgeNeedsInteriorWitness) {
  // Two opposite halfspaces describe a line, which has no interior.
  EXPECT_THROW(Cone({v({1, 0}), v({-1, 0})}), InvalidInput);
}

TEST(SubsetOfTranslate, ScalarExamples) {
  const Cone s = Cone::nonneg_reals();
  EXPECT_TRUE(subset_of_translate(PointCloud::from_points({v({0.2})}),
                                  PointCloud::from_points({v({1.0})}), s, Sign::minus));
  PointCloud a(1);
  for (int k = -100; k <= 100; ++k) a.push_back(v({k / 100.0}));
  EXPECT_TRUE(subset_of_translate(a, PointCloud::from_points({v({1.0})}), s, Sign::minus));
  EXPECT_FALSE(subset_of_translate(a, PointCloud::from_points({v({1.0})}), s, Sign::plus));
}

TEST(SubsetOfTranslate, OrthantCounterexample) {
  EXPECT_FALSE(subset_of_translate(PointCloud::from_points({v({1, 0})}),
                                   PointCloud::from_points({v({0, 0})}),
                                   Cone::nonneg_orthant(2), Sign::minus));
}

TEST(SubsetOfTranslate, EmptyOrMismatchedRejected) {
  const Cone s = Cone::nonneg_reals();
  EXPECT_THROW(subset_of_translate(PointCloud(1), PointCloud::from_points({v({1.0})}), s,
                                   Sign::minus),
               InvalidInput);
  EXPECT_THROW(subset_of_translate(PointCloud::from_points({v({1.0, 0.0})}),
                                   PointCloud::from_points({v({1.0})}), s, Sign::minus),
               InvalidInput);
}

class ConeInvariants : public ::testing::TestWithParam<const char*> {};

TEST_P(ConeInvariants, ReflexiveAntisymmetricMonotone) {
  const Cone cone = parse_cone_spec(GetParam());
  test::CloudGen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const PointCloud a = gen.real(cone.dim(), gen.uniform(1, 20));
    EXPECT_TRUE(subset_of_translate(a, a, cone, Sign::minus));
    EXPECT_TRUE(subset_of_translate(a, a, cone, Sign::plus));
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Vec z = a.point(i);
      Vec mz = z;
      for (auto& c : mz) c = -c;
      EXPECT_FALSE(cone.contains_interior(z) && cone.contains_interior(mz));
      const Cone exact = cone.with_tolerances(0.0, cone.eps_interior());
      const Cone loose = cone.with_tolerances(1e-3, cone.eps_interior());
      if (exact.contains(z)) {
        EXPECT_TRUE(loose.contains(z));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Builtins, ConeInvariants,
                         ::testing::Values("Rplus", "R2plus", "minusR2plus", "R3plus",
                                           "[[1,-0.5],[-0.5,1]]"));

}  // namespace
}  // namespace conemm
