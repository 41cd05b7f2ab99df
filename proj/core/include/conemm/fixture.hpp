#ifndef CONEMM_FIXTURE_HPP
#define CONEMM_FIXTURE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "conemm/domain.hpp"
#include "conemm/point_cloud.hpp"
#include "conemm/value_set.hpp"

namespace conemm {

class GCurve;

/// One branch of a piecewise rule: a guard and a value constructor.
struct Branch {
  std::string label;
  std::function<bool(const Coord& x, const Coord& y)> when;
  std::function<ValueSet(const Coord& x, const Coord& y)> value;
};

/**
 * @brief Closed-form piecewise set-valued rule.
 *
 * Exactly one guard must hold at each queried pair; zero or several matching
 * guards raise ConsistencyError.
 */
class PiecewiseRule {
 public:
  PiecewiseRule() = default;
  explicit PiecewiseRule(std::vector<Branch> branches);

  ValueSet operator()(const Coord& x, const Coord& y) const;
  /// Index of the unique firing branch.
  std::size_t active_branch(const Coord& x, const Coord& y) const;
  const std::vector<Branch>& branches() const { return branches_; }

 private:
  std::vector<Branch> branches_;
};

struct FixtureParams {
  int grid_resolution = 50;
  int value_resolution = 101;
  /// Queries snap onto the lattice with denominator grid_resolution * lattice_factor.
  int lattice_factor = 20;
};

/**
 * @brief Named set-valued map F : X x X => R^d on gridded domains.
 *
 * Arity-1 maps (F : X => R^d) ignore the second argument; their second grid
 * is a one-point placeholder.
 */
class SetValuedFixture {
 public:
  SetValuedFixture(std::string name, DomainGrid first, DomainGrid second,
                   int codomain_dim, PiecewiseRule rule, FixtureParams params,
                   bool single_valued = false, int arity = 2,
                   std::string description = {});

  const std::string& name() const { return name_; }
  const DomainGrid& first_grid() const { return first_; }
  const DomainGrid& second_grid() const { return second_; }
  int codomain_dim() const { return codomain_dim_; }
  bool single_valued() const { return single_valued_; }
  int arity() const { return arity_; }
  const FixtureParams& params() const { return params_; }
  const std::string& description() const { return description_; }
  const PiecewiseRule& rule() const { return rule_; }

  /// Closed-form value at (x, y); throws InvalidInput off-domain.
  ValueSet region(const Coord& x, const Coord& y) const;
  /// Snapped representatives of x and y as used by region().
  Coord canonical_first(const Coord& x) const;
  Coord canonical_second(const Coord& y) const;
  PointCloud eval(const Coord& x, const Coord& y) const;

  /// Witness curves shipped with the fixture (tried before the generic family).
  const std::vector<std::shared_ptr<const GCurve>>& witness_curves() const {
    return curves_;
  }
  void add_witness_curve(std::shared_ptr<const GCurve> curve);

  bool square() const { return arity_ == 2 && first_ == second_; }

 private:
  std::string name_;
  DomainGrid first_, second_;
  int codomain_dim_;
  PiecewiseRule rule_;
  FixtureParams params_;
  bool single_valued_;
  int arity_;
  std::string description_;
  std::vector<std::shared_ptr<const GCurve>> curves_;
};

/**
 * @brief Read-only lens on a fixture: optional transpose (x <-> y) and
 * negation (F -> -F).
 */
class FixtureView {
 public:
  FixtureView() = default;
  explicit FixtureView(const SetValuedFixture& fx, bool transposed = false,
                       bool negated = false)
      : fx_(&fx), transposed_(transposed), negated_(negated) {}

  const SetValuedFixture& fixture() const { return *fx_; }
  bool transposed() const { return transposed_; }
  bool negated() const { return negated_; }

  const DomainGrid& first_grid() const {
    return transposed_ ? fx_->second_grid() : fx_->first_grid();
  }
  const DomainGrid& second_grid() const {
    return transposed_ ? fx_->first_grid() : fx_->second_grid();
  }
  int codomain_dim() const { return fx_->codomain_dim(); }
  int value_resolution() const { return fx_->params().value_resolution; }

  ValueSet region(const Coord& x, const Coord& y) const;
  PointCloud eval(const Coord& x, const Coord& y) const {
    return region(x, y).sample(value_resolution());
  }

  FixtureView transpose() const { return FixtureView(*fx_, !transposed_, negated_); }
  FixtureView negate() const { return FixtureView(*fx_, transposed_, !negated_); }
  /// -F^T, the view under which every "second argument / Min" statement
  /// becomes its "first argument / Max" counterpart with the same cone.
  FixtureView mirror() const { return FixtureView(*fx_, !transposed_, !negated_); }

  std::string describe() const;

 private:
  const SetValuedFixture* fx_ = nullptr;
  bool transposed_ = false;
  bool negated_ = false;
};

PointCloud eval_fixture(const SetValuedFixture& fx, const Coord& x, const Coord& y);

/// F(x, X): deduplicated union over the second grid.
PointCloud union_over_second(const FixtureView& view, const Coord& x);
/// F(X, y): deduplicated union over the first grid.
PointCloud union_over_first(const FixtureView& view, const Coord& y);
/// Union of F(x, x) over the grid; needs identical grids.
PointCloud diagonal_union(const FixtureView& view);

}  // namespace conemm

#endif  // CONEMM_FIXTURE_HPP
