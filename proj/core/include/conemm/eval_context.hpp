#ifndef CONEMM_EVAL_CONTEXT_HPP
#define CONEMM_EVAL_CONTEXT_HPP

#include <array>
#include <deque>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "conemm/config.hpp"
#include "conemm/cone.hpp"
#include "conemm/extremal.hpp"
#include "conemm/fixture.hpp"

namespace conemm {

struct CoordHash {
  std::size_t operator()(const Coord& c) const noexcept;
};

/// Which side of a cone translate a frontier inclusion test targets.
enum class Inclusion { minus, minus_interior, plus, plus_interior };

/**
 * @brief First point of @p a not covered by @p b under the given inclusion.
 *
 * minus: a in b - S, plus: a in b + S; the interior variants use int S.
 * Callers usually pass frontier sets (Max for minus, Min for plus).
 */
std::optional<Vec> first_uncovered(const PointCloud& a, const PointCloud& b,
                                   const Cone& cone, Inclusion inc);

/**
 * @brief Memoized evaluation of one oriented view of a fixture.
 *
 * Argument points are canonicalized and interned; grid points get the ids
 * 0..count-1 in grid order. Values, extremal sets and the unions F(x, X)
 * over the second grid are computed lazily and kept for the lifetime of the
 * context. Not thread-safe.
 */
class EvalContext {
 public:
  EvalContext(FixtureView view, Cone cone, ToleranceConfig cfg);
  EvalContext(const EvalContext&) = delete;
  EvalContext& operator=(const EvalContext&) = delete;
  ~EvalContext();

  const FixtureView& view() const { return view_; }
  const Cone& cone() const { return cone_; }
  const ToleranceConfig& config() const { return cfg_; }
  int value_dim() const { return view_.codomain_dim(); }
  bool single_valued() const { return view_.fixture().single_valued(); }

  int first_grid_size() const { return first_grid_; }
  int second_grid_size() const { return second_grid_; }

  int first_id(const Coord& x);
  int second_id(const Coord& y);
  const Coord& first_point(int id) const { return first_pts_[id]; }
  const Coord& second_point(int id) const { return second_pts_[id]; }

  const ValueSet& region(int xid, int yid);
  const PointCloud& values(int xid, int yid);
  const PointCloud& extremal(int xid, int yid, ExtremalMode mode);

  /// Extremal points of F(x, X) = union over the second grid.
  const PointCloud& row_extremal(int xid, ExtremalMode mode);
  /// True when p lies in F(x, y) for some second-grid y.
  bool row_contains(int xid, ConstSpan p);
  /// F(x_a, y_a) intersected with F(x_row, X), as sample points.
  PointCloud intersect_with_row(int xid, int yid, int row_xid);
  /// Extremal points of intersect_with_row(); empty when the sets are disjoint.
  PointCloud meet_extremal(int xid, int yid, int row_xid, ExtremalMode mode);

  /// True when some point of @p pts lies in the region F(x, y).
  bool meets(int xid, int yid, const PointCloud& pts);

  long long cells_evaluated() const { return static_cast<long long>(cells_.size()); }

 private:
  struct Cell;
  struct Row;

  Cell& cell(int xid, int yid);
  Row& row(int xid);
  const PointCloud& row_anchor(int row_xid);

  FixtureView view_;
  Cone cone_;
  ToleranceConfig cfg_;
  int lattice_factor_;
  int first_grid_ = 0;
  int second_grid_ = 0;
  std::unordered_map<Coord, int, CoordHash> first_ids_, second_ids_;
  std::deque<Coord> first_pts_, second_pts_;
  std::unordered_map<std::uint64_t, std::unique_ptr<Cell>> cells_;
  std::vector<std::unique_ptr<Row>> rows_;
};

}  // namespace conemm

#endif  // CONEMM_EVAL_CONTEXT_HPP
