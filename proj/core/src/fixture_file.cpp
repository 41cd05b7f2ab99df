#include "conemm/fixture_file.hpp"

#include <fstream>

#include "conemm/expression.hpp"

namespace conemm {
namespace {

DomainGrid domain_from(const nlohmann::json& d, int resolution) {
  if (!d.is_object() || !d.contains("lo") || !d.contains("hi"))
    throw InvalidInput("domain must be an object with lo and hi");
  return DomainGrid::interval(d.at("lo").get<double>(), d.at("hi").get<double>(), resolution);
}

}  // namespace

LoadedFixture fixture_from_json(const nlohmann::json& doc, FixtureParams params) {
  try {
    if (!doc.is_object()) throw InvalidInput("fixture document must be an object");
    const std::string name = doc.value("name", std::string("custom"));
    const int arity = doc.value("arity", 2);
    const bool single = doc.value("single_valued", false);
    if (arity != 1 && arity != 2) throw InvalidInput("arity must be 1 or 2");

    const nlohmann::json none = nlohmann::json::object({{"lo", 0.0}, {"hi", 1.0}});
    const nlohmann::json& shared = doc.contains("domain") ? doc.at("domain") : none;
    DomainGrid first = domain_from(doc.contains("first_domain") ? doc.at("first_domain") : shared,
                                   params.grid_resolution);
    DomainGrid second = arity == 1 ? DomainGrid::interval(0.0, 0.0, 1)
                                   : domain_from(doc.contains("second_domain")
                                                     ? doc.at("second_domain")
                                                     : shared,
                                                 params.grid_resolution);

    if (!doc.contains("branches") || !doc.at("branches").is_array() ||
        doc.at("branches").empty())
      throw InvalidInput("fixture needs a nonempty 'branches' list");
    std::vector<Branch> branches;
    int dim = -1;
    for (const auto& b : doc.at("branches")) {
      const std::string when = b.value("when", std::string("true"));
      const std::string value = b.at("value").get<std::string>();
      ConditionExpr c = ConditionExpr::parse(when);
      ValueExpr v = ValueExpr::parse(value);
      if (dim < 0) dim = v.dim();
      if (v.dim() != dim) throw InvalidInput("branches produce different dimensions");
      branches.push_back(Branch{b.value("label", when),
                                [c](const Coord& x, const Coord& y) { return c(x[0], y[0]); },
                                [v](const Coord& x, const Coord& y) { return v(x[0], y[0]); }});
    }
    const int declared = doc.value("codomain_dim", dim);
    if (declared != dim) throw InvalidInput("codomain_dim disagrees with the branch values");

    std::optional<std::string> cone;
    if (doc.contains("cone"))
      cone = doc.at("cone").is_string() ? doc.at("cone").get<std::string>()
                                        : doc.at("cone").dump();
    return LoadedFixture{SetValuedFixture(name, std::move(first), std::move(second), dim,
                                          PiecewiseRule(std::move(branches)), params,
                                          single, arity, doc.value("description", std::string{})),
                         cone};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed fixture document: ") + e.what());
  }
}

LoadedFixture load_fixture_file(const std::string& path, FixtureParams params) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fixture file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("fixture file '" + path + "' is not valid JSON: " + e.what());
  }
  return fixture_from_json(doc, params);
}

}  // namespace conemm
