#ifndef CONEMM_VERDICT_HPP
#define CONEMM_VERDICT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "conemm/config.hpp"
#include "conemm/fixture.hpp"
#include "conemm/types.hpp"

namespace conemm {

enum class PropertyKind {
  properly_qc_iii,
  properly_qc_v,
  naturally_qc_iii,
  naturally_qc_v,
  s_qc,
  qc,
  natural_qc_scalar,
  wcg,
  wnq,
  transfer_mu_v,
  transfer_mu_iii,
  transfer_weak_mu_v,
  transfer_weak_mu_iii,
  transfer_mu_scalar,
  pair_properly_iii,
  pair_properly_v,
  pair_properly_plain,
  pair_properly_scalar,
  transfer_properly_iii,
  transfer_properly_v,
  alpha,
  alpha_prime,
  gamma,
  gamma_prime,
  weakly_z,
};

enum class Arg { first, second };
enum class Polarity { convex, concave };

std::string to_string(PropertyKind kind);
std::string to_string(Arg arg);
std::string to_string(Polarity polarity);
PropertyKind parse_property_kind(std::string_view s);
Arg parse_arg(std::string_view s);
Polarity parse_polarity(std::string_view s);
const std::vector<PropertyKind>& all_property_kinds();

/// Existential properties report Confirmed/NotConfirmed instead of Refuted/NotRefuted.
bool is_existential(PropertyKind kind);
/// Properties stated for a map of one argument, checked per slice of a two-argument map.
bool is_single_map(PropertyKind kind);
bool needs_single_valued(PropertyKind kind);

struct PropertySpec {
  PropertyKind kind = PropertyKind::properly_qc_iii;
  Arg arg = Arg::first;
  Polarity polarity = Polarity::convex;

  /// e.g. "transfer_mu_v[second,concave]".
  std::string id() const;
  static PropertySpec parse(std::string_view id);
  friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

/**
 * @brief View of the fixture the property is evaluated on.
 *
 * arg=second transposes, concave negates (same cone). The primed conditions
 * (alpha_prime, gamma_prime) evaluate their unprimed form on the mirror -F^T.
 */
FixtureView oriented_view(const SetValuedFixture& fx, const PropertySpec& spec);

enum class Status { refuted, not_refuted, confirmed, not_confirmed };
std::string to_string(Status s);
/// Process exit code for a single verdict: 0 holds, 1 fails.
int exit_code(Status s);
inline bool is_failure(Status s) {
  return s == Status::refuted || s == Status::not_confirmed;
}

/**
 * @brief Points that make a verdict reproducible.
 *
 * Coordinates are in the oriented view of the verdict's property.
 */
struct Witness {
  std::vector<Coord> x;   ///< domain tuple
  std::vector<Coord> y;   ///< second-argument points (slice, selections, z_i)
  Vec lambda;
  std::vector<Vec> values;  ///< value-space points (selections, violations)
  Vec target;               ///< value-space z for weakly_z
  int index = -1;           ///< tuple index i where relevant
  std::string curve;
  Vec curve_params;
  std::string note;

  bool empty() const { return x.empty() && y.empty() && values.empty(); }
  nlohmann::json to_json() const;
  static Witness from_json(const nlohmann::json& j);
};

/// One row of a per-tuple strategy: grid indices, compact enough for large sweeps.
struct StrategyRow {
  static constexpr int kMaxTuple = 4;
  std::uint8_t n = 0;
  std::uint8_t curve = 0;
  std::uint16_t target = 0;
  std::array<std::uint16_t, kMaxTuple> tuple{};
  std::array<std::uint16_t, kMaxTuple> choice{};
  std::uint16_t slice = 0;
};

struct Verdict {
  std::string fixture;
  std::string cone;
  PropertySpec property;
  Status status = Status::not_refuted;
  Witness witness;
  /// Universal confirmations with small tables (alpha): one entry per point.
  std::vector<Witness> table;
  /// Universal confirmations over tuples (wnq, weakly_z).
  std::vector<StrategyRow> strategy;
  std::vector<std::pair<std::string, Vec>> strategy_curves;
  std::vector<Vec> strategy_targets;
  std::map<std::string, long long> coverage;
  /// Searches cut off by the node budget.
  long long inconclusive = 0;
  ToleranceConfig tolerances;
  std::string note;

  nlohmann::json to_json() const;
  std::uint64_t strategy_digest() const;
};

}  // namespace conemm

#endif  // CONEMM_VERDICT_HPP
