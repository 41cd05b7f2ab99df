#ifndef CONEMM_CONFIG_HPP
#define CONEMM_CONFIG_HPP

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "conemm/cone.hpp"
#include "conemm/fixture.hpp"

namespace conemm {

struct ToleranceConfig {
  double eps_cone = 1e-9;
  double eps_interior = 1e-9;
  int grid_resolution = 50;
  int value_resolution = 101;
  int lambda_steps = 21;
  int n_max = 3;
  int coeff_steps = 20;
  std::uint64_t seed = 20240601;
  /// Node cap for one selection search (tuple x curve); 0 disables the cap.
  long long search_budget = 400000;

  /// Throws InvalidInput on nonpositive resolutions or negative tolerances.
  void validate() const;

  FixtureParams fixture_params() const {
    return FixtureParams{grid_resolution, value_resolution, lambda_steps - 1};
  }

  nlohmann::json to_json() const;
  static ToleranceConfig from_json(const nlohmann::json& j);
  /// Reads a JSON config file; keys mirror the field names.
  static ToleranceConfig load(const std::string& path);

  friend bool operator==(const ToleranceConfig&, const ToleranceConfig&) = default;
};

/**
 * @brief Parses a cone spec: a built-in name (Rplus, R2plus, minusR2plus, ...)
 * or an inline JSON list of normals such as [[1,0],[0,1]].
 */
Cone parse_cone_spec(const std::string& spec, double eps_cone = kDefaultEpsCone,
                     double eps_interior = kDefaultEpsInterior);

}  // namespace conemm

#endif  // CONEMM_CONFIG_HPP
