#ifndef CONEMM_FIXTURE_LIBRARY_HPP
#define CONEMM_FIXTURE_LIBRARY_HPP

#include <string>
#include <vector>

#include "conemm/fixture.hpp"

namespace conemm {

struct FixtureInfo {
  std::string name;
  std::string description;
  std::string default_cone;
  int codomain_dim = 1;
  int arity = 2;
  bool single_valued = false;
  bool auxiliary = false;
};

/// The seventeen worked-example maps, in listing order.
std::vector<std::string> builtin_fixture_names();
/// Small synthetic maps used by soundness checks (constant maps and friends).
std::vector<std::string> auxiliary_fixture_names();

bool has_fixture(const std::string& name);
FixtureInfo fixture_info(const std::string& name);

/// Builds a registered fixture; throws InvalidInput for unknown names.
SetValuedFixture make_fixture(const std::string& name, FixtureParams params = {});

/**
 * @brief Branch selector of the two-branch disc map on a finite grid.
 *
 * y counts as "irrational" iff it lies on the offset grid
 * frac(k / resolution + 1/sqrt(2)); every other point is "rational".
 */
bool on_irrational_subgrid(double y, int resolution);
std::vector<Coord> irrational_subgrid(int resolution);

}  // namespace conemm

#endif  // CONEMM_FIXTURE_LIBRARY_HPP
