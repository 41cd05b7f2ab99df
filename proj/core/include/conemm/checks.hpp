#ifndef CONEMM_CHECKS_HPP
#define CONEMM_CHECKS_HPP

#include <optional>
#include <vector>

#include "conemm/config.hpp"
#include "conemm/cone.hpp"
#include "conemm/curves.hpp"
#include "conemm/fixture.hpp"
#include "conemm/verdict.hpp"

namespace conemm {

struct CheckOptions {
  ToleranceConfig cfg;
  /// Curve family for wnq and weakly_z. Unset: the fixture's registered
  /// witness curves, then identity and the standard power curves.
  std::optional<GCurveFamily> family;
  /// Targets z for weakly_z in the oriented view. Empty: Min of the union
  /// of Max_w F(x, X) over the first grid.
  std::vector<Vec> z_set;
};

/// Runs one property check over the grids of @p fx.
Verdict check_property(const SetValuedFixture& fx, const Cone& cone,
                       const PropertySpec& spec, const CheckOptions& opt = {});

/// Re-evaluates the witness (or strategy table) of a Refuted or Confirmed
/// verdict through the same predicate; true when the status is reproduced.
bool replay(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
            const CheckOptions& opt = {});

/// Whether one tuple of a single-argument map admits a selection y_i in
/// F(x_i) whose combinations stay in the graph. Refuted when none exists.
Verdict check_wcg_tuple(const SetValuedFixture& fx, const Cone& cone,
                        const std::vector<Coord>& xs, const CheckOptions& opt = {});

/// Both disjuncts of the pair-properly condition at one configuration, in
/// the oriented view of @p spec; off-grid points are evaluated in closed form.
struct PairDisjuncts {
  bool first = false;
  bool second = false;
};
PairDisjuncts pair_properly_disjuncts(const SetValuedFixture& fx, const Cone& cone,
                                      const PropertySpec& spec, const Coord& x1,
                                      const Coord& y1, const Coord& x2,
                                      const Coord& y2, double lambda,
                                      const CheckOptions& opt = {});

/// Default weakly_z targets: Min of the union of Max_w F(x, X) in @p view.
std::vector<Vec> default_weakly_z_targets(const FixtureView& view, const Cone& cone,
                                          const ToleranceConfig& cfg);

}  // namespace conemm

#endif  // CONEMM_CHECKS_HPP
