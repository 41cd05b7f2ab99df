#ifndef CONEMM_FIXTURE_FILE_HPP
#define CONEMM_FIXTURE_FILE_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "conemm/fixture.hpp"

namespace conemm {

struct LoadedFixture {
  SetValuedFixture fixture;
  /// Cone spec stored in the file, if any (same syntax as --cone).
  std::optional<std::string> cone_spec;
};

/**
 * @brief Builds a fixture from a JSON document.
 *
 * Keys: name, domain {lo, hi} (or first_domain / second_domain), arity (1|2),
 * codomain_dim, single_valued, optional cone, and branches: a list of
 * {label?, when, value} using the expression language.
 */
LoadedFixture fixture_from_json(const nlohmann::json& doc, FixtureParams params);
LoadedFixture load_fixture_file(const std::string& path, FixtureParams params);

}  // namespace conemm

#endif  // CONEMM_FIXTURE_FILE_HPP
