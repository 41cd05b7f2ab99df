#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "conemm/domain.hpp"
#include "conemm/fixture_file.hpp"
#include "conemm/fixture_library.hpp"
#include "support.hpp"

namespace conemm {
namespace {

FixtureParams params(int res = 50) { return FixtureParams{res, 101, 20}; }

/// Lower and upper end of a sampled interval value.
std::pair<double, double> span(const PointCloud& c) {
  const auto xs = test::column(c);
  return {*std::min_element(xs.begin(), xs.end()), *std::max_element(xs.begin(), xs.end())};
}

TEST(FixtureLibrary, SeventeenBuiltins) {
  const auto names = builtin_fixture_names();
  EXPECT_EQ(names.size(), 17u);
  EXPECT_EQ(names.front(), "ex2_1");
  EXPECT_NE(std::find(names.begin(), names.end(), "rem4_2"), names.end());
  for (const auto& n : names) {
    EXPECT_TRUE(has_fixture(n));
    const auto fx = make_fixture(n, params(10));
    EXPECT_EQ(fx.codomain_dim(), fixture_info(n).codomain_dim) << n;
  }
  EXPECT_THROW(make_fixture("ex9_9"), InvalidInput);
}

TEST(FixtureLibrary, BranchValues) {
  const auto ex31 = make_fixture("ex3_1", params());
  EXPECT_EQ(span(ex31.eval({0.5}, {0.2})), std::make_pair(-0.5, 0.2));
  EXPECT_EQ(span(ex31.eval({0.2}, {0.5})), std::make_pair(-1.0, 0.5));
  EXPECT_EQ(span(make_fixture("ex4_2", params()).eval({0.3}, {0.7})),
            std::make_pair(-1.0, 1.0));
  EXPECT_EQ(make_fixture("ex4_1", params()).eval({0.2}, {0.5}).to_vectors(),
            (std::vector<Vec>{{0, 0}}));
  EXPECT_EQ(make_fixture("ex4_7", params()).eval({0.2}, {0.6}).to_vectors(),
            (std::vector<Vec>{{0.2, 0.6}}));
  EXPECT_EQ(make_fixture("ex4_7", params()).eval({0.6}, {0.2}).to_vectors(),
            (std::vector<Vec>{{1, 1}}));
}

TEST(FixtureLibrary, SetValuedTwoBranchMapFollowsClosedForm) {
  // Independent restatement: [-1, y] on or above the diagonal, [-x, y] below.
  const auto fx = make_fixture("ex3_1", params(20));
  for (const auto& x : fx.first_grid().points())
    for (const auto& y : fx.second_grid().points()) {
      const double lo = x[0] <= y[0] ? -1.0 : -x[0];
      const auto [a, b] = span(fx.eval(x, y));
      ASSERT_DOUBLE_EQ(a, lo);
      ASSERT_DOUBLE_EQ(b, y[0]);
    }
}

TEST(FixtureLibrary, OffDomainRejected) {
  const auto fx = make_fixture("ex3_1", params());
  EXPECT_THROW(fx.region({1.5}, {0.2}), InvalidInput);
}

TEST(FixtureLibrary, Unions) {
  const auto ex31 = make_fixture("ex3_1", params());
  EXPECT_EQ(span(union_over_second(FixtureView(ex31), {0.5})), std::make_pair(-1.0, 1.0));
  EXPECT_EQ(span(union_over_second(FixtureView(make_fixture("ex4_6", params())), {0.4})),
            std::make_pair(0.0, 1.0));
  EXPECT_EQ(span(diagonal_union(FixtureView(make_fixture("ex4_2", params())))),
            std::make_pair(-1.0, 1.0));
  EXPECT_EQ(span(diagonal_union(FixtureView(make_fixture("ex4_3", params())))),
            std::make_pair(0.0, 1.0));
  EXPECT_EQ(diagonal_union(FixtureView(make_fixture("ex4_1", params()))).to_vectors(),
            (std::vector<Vec>{{0, 0}}));
  const auto c = make_fixture("const_A0", params(10));
  EXPECT_EQ(span(union_over_second(FixtureView(c), {0.3})), std::make_pair(0.0, 1.0));
}

TEST(FixtureLibrary, ViewsTransposeAndNegate) {
  const auto fx = make_fixture("ex3_1", params());
  const FixtureView v(fx);
  EXPECT_EQ(span(v.transpose().eval({0.2}, {0.5})), std::make_pair(-0.5, 0.2));
  EXPECT_EQ(span(v.negate().eval({0.5}, {0.2})), std::make_pair(-0.2, 0.5));
  EXPECT_EQ(span(v.mirror().eval({0.2}, {0.5})), std::make_pair(-0.2, 0.5));
}

TEST(FixtureLibrary, OffsetSubgridSelectsSecondBranch) {
  const auto pts = irrational_subgrid(50);
  ASSERT_FALSE(pts.empty());
  for (const auto& p : pts) EXPECT_TRUE(on_irrational_subgrid(p[0], 50));
  EXPECT_FALSE(on_irrational_subgrid(0.0, 50));
  EXPECT_FALSE(on_irrational_subgrid(0.5, 50));
}

TEST(DomainGrid, LatticeCounts) {
  EXPECT_EQ(DomainGrid::interval(0, 1, 50).points().size(), 51u);
  EXPECT_EQ(DomainGrid::box({0, 0}, {1, 1}, 4).points().size(), 25u);
  EXPECT_EQ(DomainGrid::simplex(3, 4).points().size(), 15u);
  EXPECT_EQ(DomainGrid::expected_lattice_count(DomainGrid::Shape::simplex, 3, 4), 15u);
  EXPECT_EQ(simplex_lattice(2, 3), (std::vector<Vec>{{1, 0}, {0.5, 0.5}, {0, 1}}));
}

TEST(DomainGrid, SnapMakesEqualRationalsIdentical) {
  const auto g = DomainGrid::interval(0, 1, 50);
  const Coord a = g.snap(combine({Coord{0.1}, Coord{0.3}}, {0.5, 0.5}), 20);
  const Coord b = g.snap(Coord{0.2}, 20);
  EXPECT_EQ(a, b);
  EXPECT_THROW(g.snap(Coord{1.2}, 20), InvalidInput);
}

TEST(DomainGrid, WeightsValidated) {
  EXPECT_NO_THROW(Weights({0.25, 0.75}));
  EXPECT_THROW(Weights({0.5, 0.6}), InvalidInput);
  EXPECT_THROW(Weights({-0.1, 1.1}), InvalidInput);
}

TEST(FixtureFile, ExpressionBranches) {
  const nlohmann::json doc = {
      {"name", "wedge"},
      {"cone", "Rplus"},
      {"branches",
       {{{"when", "x <= y"}, {"value", "interval(-1, y)"}}, {{"when", "y < x"}, {"value", "interval(-x, y)"}}}}};
  const LoadedFixture lf = fixture_from_json(doc, params(20));
  ASSERT_TRUE(lf.cone_spec.has_value());
  EXPECT_EQ(*lf.cone_spec, "Rplus");
  const auto ref = make_fixture("ex3_1", params(20));
  for (const auto& x : ref.first_grid().points())
    for (const auto& y : ref.second_grid().points())
      ASSERT_EQ(lf.fixture.eval(x, y), ref.eval(x, y));
}

TEST(FixtureFile, MalformedDocumentsRejected) {
  EXPECT_THROW(fixture_from_json(nlohmann::json::array(), params()), InvalidInput);
  EXPECT_THROW(fixture_from_json({{"name", "x"}}, params()), InvalidInput);
  EXPECT_THROW(load_fixture_file("/nonexistent/fixture.json", params()), InvalidInput);
}

TEST(FixtureFile, OverlappingGuardsAreInconsistent) {
  const nlohmann::json doc = {
      {"branches",
       {{{"when", "x <= y"}, {"value", "interval(0, 1)"}}, {{"when", "x >= y"}, {"value", "interval(0, 2)"}}}}};
  const LoadedFixture lf = fixture_from_json(doc, params(10));
  EXPECT_THROW(lf.fixture.eval({0.5}, {0.5}), ConsistencyError);
  EXPECT_NO_THROW(lf.fixture.eval({0.2}, {0.5}));
}

}  // namespace
}  // namespace conemm
