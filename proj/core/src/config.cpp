#include "conemm/config.hpp"

#include <fstream>

namespace conemm {

void ToleranceConfig::validate() const {
  if (!(eps_cone >= 0.0)) throw InvalidInput("eps_cone must be nonnegative");
  if (!(eps_interior > 0.0)) throw InvalidInput("eps_interior must be positive");
  if (grid_resolution <= 0) throw InvalidInput("grid_resolution must be positive");
  if (value_resolution <= 0) throw InvalidInput("value_resolution must be positive");
  if (lambda_steps < 2) throw InvalidInput("lambda_steps must be at least 2");
  if (n_max <= 0) throw InvalidInput("n_max must be positive");
  if (coeff_steps <= 0) throw InvalidInput("coeff_steps must be positive");
  if (search_budget < 0) throw InvalidInput("search_budget must be nonnegative");
}

nlohmann::json ToleranceConfig::to_json() const {
  return nlohmann::json{{"eps_cone", eps_cone},
                        {"eps_interior", eps_interior},
                        {"grid_resolution", grid_resolution},
                        {"value_resolution", value_resolution},
                        {"lambda_steps", lambda_steps},
                        {"n_max", n_max},
                        {"coeff_steps", coeff_steps},
                        {"seed", seed},
                        {"search_budget", search_budget}};
}

ToleranceConfig ToleranceConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("config must be a JSON object");
  static const char* known[] = {"eps_cone",     "eps_interior", "grid_resolution",
                                "value_resolution", "lambda_steps", "n_max",
                                "coeff_steps",  "seed",         "search_budget"};
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw InvalidInput("unknown config key '" + key + "'");
  }
  ToleranceConfig c;
  try {
    c.eps_cone = j.value("eps_cone", c.eps_cone);
    c.eps_interior = j.value("eps_interior", c.eps_interior);
    c.grid_resolution = j.value("grid_resolution", c.grid_resolution);
    c.value_resolution = j.value("value_resolution", c.value_resolution);
    c.lambda_steps = j.value("lambda_steps", c.lambda_steps);
    c.n_max = j.value("n_max", c.n_max);
    c.coeff_steps = j.value("coeff_steps", c.coeff_steps);
    c.seed = j.value("seed", c.seed);
    c.search_budget = j.value("search_budget", c.search_budget);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad config value: ") + e.what());
  }
  c.validate();
  return c;
}

ToleranceConfig ToleranceConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("config file is not valid JSON: " + std::string(e.what()));
  }
  return from_json(j);
}

Cone parse_cone_spec(const std::string& spec, double eps_cone, double eps_interior) {
  if (!spec.empty() && spec.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::exception&) {
      throw InvalidInput("cone spec is neither a name nor a JSON list of normals");
    }
    if (!j.is_array() || j.empty()) throw InvalidInput("cone spec needs a list of normals");
    std::vector<Vec> normals;
    try {
      for (const auto& n : j) normals.push_back(n.get<Vec>());
    } catch (const nlohmann::json::exception&) {
      throw InvalidInput("cone normals must be numeric lists");
    }
    return Cone(std::move(normals), {}, eps_cone, eps_interior, "inline");
  }
  return Cone::from_name(spec).with_tolerances(eps_cone, eps_interior);
}

}  // namespace conemm
