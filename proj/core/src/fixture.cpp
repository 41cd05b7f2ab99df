#include "conemm/fixture.hpp"

#include <sstream>

#include "conemm/curves.hpp"

namespace conemm {
namespace {

std::string coord_text(const Coord& c) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (int a = 0; a < c.dim(); ++a) os << (a ? "," : "") << c[a];
  os << ')';
  return os.str();
}

}  // namespace

PiecewiseRule::PiecewiseRule(std::vector<Branch> branches)
    : branches_(std::move(branches)) {
  if (branches_.empty()) throw InvalidInput("piecewise rule without branches");
}

std::size_t PiecewiseRule::active_branch(const Coord& x, const Coord& y) const {
  std::size_t hit = branches_.size();
  for (std::size_t b = 0; b < branches_.size(); ++b) {
    if (!branches_[b].when(x, y)) continue;
    if (hit != branches_.size())
      throw ConsistencyError("branches '" + branches_[hit].label + "' and '" +
                             branches_[b].label + "' both fire at x=" +
                             coord_text(x) + ", y=" + coord_text(y));
    hit = b;
  }
  if (hit == branches_.size())
    throw ConsistencyError("no branch fires at x=" + coord_text(x) +
                           ", y=" + coord_text(y));
  return hit;
}

ValueSet PiecewiseRule::operator()(const Coord& x, const Coord& y) const {
  return branches_[active_branch(x, y)].value(x, y);
}

SetValuedFixture::SetValuedFixture(std::string name, DomainGrid first,
                                   DomainGrid second, int codomain_dim,
                                   PiecewiseRule rule, FixtureParams params,
                                   bool single_valued, int arity,
                                   std::string description)
    : name_(std::move(name)),
      first_(std::move(first)),
      second_(std::move(second)),
      codomain_dim_(codomain_dim),
      rule_(std::move(rule)),
      params_(params),
      single_valued_(single_valued),
      arity_(arity),
      description_(std::move(description)) {
  if (codomain_dim_ <= 0) throw InvalidInput("codomain dimension must be positive");
  if (arity_ != 1 && arity_ != 2) throw InvalidInput("fixture arity must be 1 or 2");
  if (params_.value_resolution <= 0 || params_.lattice_factor <= 0)
    throw InvalidInput("fixture resolutions must be positive");
}

Coord SetValuedFixture::canonical_first(const Coord& x) const {
  return first_.snap(x, params_.lattice_factor);
}

Coord SetValuedFixture::canonical_second(const Coord& y) const {
  if (arity_ == 1) return second_.points().front();
  return second_.snap(y, params_.lattice_factor);
}

ValueSet SetValuedFixture::region(const Coord& x, const Coord& y) const {
  const Coord cx = canonical_first(x);
  const Coord cy = canonical_second(y);
  ValueSet v = rule_(cx, cy);
  if (v.dim() != codomain_dim_)
    throw ConsistencyError("fixture '" + name_ + "' produced a value of dimension " +
                           std::to_string(v.dim()));
  if (single_valued_ && !(v.kind() == ValueSet::Kind::points && v.point_set().size() == 1))
    throw ConsistencyError("single-valued fixture '" + name_ +
                           "' produced a non-singleton value");
  return v;
}

PointCloud SetValuedFixture::eval(const Coord& x, const Coord& y) const {
  return region(x, y).sample(params_.value_resolution);
}

void SetValuedFixture::add_witness_curve(std::shared_ptr<const GCurve> curve) {
  if (!curve) throw InvalidInput("null witness curve");
  curves_.push_back(std::move(curve));
}

ValueSet FixtureView::region(const Coord& x, const Coord& y) const {
  ValueSet v = transposed_ ? fx_->region(y, x) : fx_->region(x, y);
  return negated_ ? v.negated() : v;
}

std::string FixtureView::describe() const {
  std::string s = fx_->name();
  if (transposed_ && negated_) return "-" + s + "^T";
  if (transposed_) return s + "^T";
  if (negated_) return "-" + s;
  return s;
}

PointCloud eval_fixture(const SetValuedFixture& fx, const Coord& x, const Coord& y) {
  return fx.eval(x, y);
}

PointCloud union_over_second(const FixtureView& view, const Coord& x) {
  PointCloud out(view.codomain_dim());
  for (const auto& y : view.second_grid().points()) out.append(view.eval(x, y));
  return out.deduplicated(1e-12);
}

PointCloud union_over_first(const FixtureView& view, const Coord& y) {
  PointCloud out(view.codomain_dim());
  for (const auto& x : view.first_grid().points()) out.append(view.eval(x, y));
  return out.deduplicated(1e-12);
}

PointCloud diagonal_union(const FixtureView& view) {
  if (!(view.first_grid() == view.second_grid()))
    throw InvalidInput("diagonal union needs identical argument grids");
  PointCloud out(view.codomain_dim());
  for (const auto& x : view.first_grid().points()) out.append(view.eval(x, x));
  return out.deduplicated(1e-12);
}

}  // namespace conemm
