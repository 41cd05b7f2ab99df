#ifndef CONEMM_CHECK_INTERNAL_HPP
#define CONEMM_CHECK_INTERNAL_HPP

#include <functional>
#include <vector>

#include "conemm/checks.hpp"
#include "conemm/domain.hpp"
#include "conemm/eval_context.hpp"

namespace conemm::detail {

Verdict blank_verdict(const SetValuedFixture& fx, const Cone& cone,
                      const PropertySpec& spec, const ToleranceConfig& cfg);

/// Visits strictly increasing index tuples of size n over [0, m); stops when fn returns false.
bool for_each_tuple(int m, int n, const std::function<bool(const std::vector<int>&)>& fn);

/// Simplex lattice for n weights with the max support index of each point.
struct LambdaGrid {
  std::vector<Vec> lambdas;
  std::vector<int> last;  ///< largest i with lambda_i > 0
  std::vector<char> interior;  ///< all weights positive
};
const LambdaGrid& lambda_grid(int n, int steps);

std::vector<Coord> points_of(const EvalContext& ctx, const std::vector<int>& ids);

Verdict check_single_map(const SetValuedFixture& fx, const Cone& cone,
                         const PropertySpec& spec, const CheckOptions& opt);
bool replay_single_map(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                       const CheckOptions& opt);

Verdict check_graph(const SetValuedFixture& fx, const Cone& cone,
                    const PropertySpec& spec, const CheckOptions& opt);
bool replay_graph(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                  const CheckOptions& opt);

Verdict check_transfer_mu(const SetValuedFixture& fx, const Cone& cone,
                          const PropertySpec& spec, const CheckOptions& opt);
bool replay_transfer_mu(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                        const CheckOptions& opt);

Verdict check_pair_properly(const SetValuedFixture& fx, const Cone& cone,
                            const PropertySpec& spec, const CheckOptions& opt);
bool replay_pair_properly(const Verdict& v, const SetValuedFixture& fx,
                          const Cone& cone, const CheckOptions& opt);

Verdict check_transfer_properly(const SetValuedFixture& fx, const Cone& cone,
                                const PropertySpec& spec, const CheckOptions& opt);
bool replay_transfer_properly(const Verdict& v, const SetValuedFixture& fx,
                              const Cone& cone, const CheckOptions& opt);

Verdict check_alpha(const SetValuedFixture& fx, const Cone& cone,
                    const PropertySpec& spec, const CheckOptions& opt);
bool replay_alpha(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                  const CheckOptions& opt);

Verdict check_gamma(const SetValuedFixture& fx, const Cone& cone,
                    const PropertySpec& spec, const CheckOptions& opt);
bool replay_gamma(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                  const CheckOptions& opt);

Verdict check_weakly_z(const SetValuedFixture& fx, const Cone& cone,
                       const PropertySpec& spec, const CheckOptions& opt);
bool replay_weakly_z(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                     const CheckOptions& opt);

/// Curves of @p family for arity n, registered curves first.
std::vector<std::shared_ptr<const GCurve>> ordered_curves(const GCurveFamily& family,
                                                          int n);
GCurveFamily effective_family(const SetValuedFixture& fx, const CheckOptions& opt);

}  // namespace conemm::detail

#endif  // CONEMM_CHECK_INTERNAL_HPP
