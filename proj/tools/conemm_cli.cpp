#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "conemm/checks.hpp"
#include "conemm/config.hpp"
#include "conemm/fixture_file.hpp"
#include "conemm/fixture_library.hpp"
#include "conemm/report.hpp"
#include "conemm/theorem_suite.hpp"

namespace {

using namespace conemm;

constexpr int kUsageError = 2;

struct Common {
  std::string config_path;
  std::optional<int> resolution, n_max, lambda_steps;
  std::optional<double> eps;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  bool timing = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON config file mirroring the tolerance fields")
        ->check(CLI::ExistingFile);
    app->add_option("--resolution", resolution, "Domain grid resolution");
    app->add_option("--n-max", n_max, "Largest tuple size");
    app->add_option("--lambda-steps", lambda_steps, "Lambda lattice steps");
    app->add_option("--eps", eps, "Cone tolerance (sets eps_cone and eps_interior)");
    app->add_option("--seed", seed, "Seed for randomized suites");
    app->add_option("--out", out, "Write the report here instead of stdout");
    app->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "markdown"}));
    app->add_flag("--timing", timing, "Record wall time per entry");
  }

  ToleranceConfig config() const {
    ToleranceConfig cfg = config_path.empty() ? ToleranceConfig{}
                                              : ToleranceConfig::load(config_path);
    if (resolution) cfg.grid_resolution = *resolution;
    if (n_max) cfg.n_max = *n_max;
    if (lambda_steps) cfg.lambda_steps = *lambda_steps;
    if (eps) cfg.eps_cone = cfg.eps_interior = *eps;
    if (seed) cfg.seed = *seed;
    cfg.validate();
    return cfg;
  }

  void emit(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InvalidInput("cannot write '" + out + "'");
    f << text;
  }
};

struct FixtureArgs {
  std::string name;
  std::string file;
  std::string cone;

  void attach(CLI::App* app, bool with_cone) {
    auto* n = app->add_option("--fixture", name, "Built-in fixture name");
    auto* f = app->add_option("--fixture-file", file, "JSON fixture file")
                  ->check(CLI::ExistingFile);
    n->excludes(f);
    if (with_cone)
      app->add_option("--cone", cone, "Cone spec: Rplus, R2plus, minusR2plus or [[normals]]");
  }

  struct Loaded {
    SetValuedFixture fixture;
    Cone cone;
  };

  Loaded load(const ToleranceConfig& cfg) const {
    std::optional<std::string> default_cone;
    std::optional<SetValuedFixture> fx;
    if (!file.empty()) {
      LoadedFixture lf = load_fixture_file(file, cfg.fixture_params());
      default_cone = lf.cone_spec;
      fx.emplace(std::move(lf.fixture));
    } else if (!name.empty()) {
      fx.emplace(make_fixture(name, cfg.fixture_params()));
      default_cone = fixture_info(name).default_cone;
    } else {
      throw InvalidInput("one of --fixture or --fixture-file is required");
    }
    const std::string spec = !cone.empty() ? cone : default_cone.value_or("");
    if (spec.empty()) throw InvalidInput("no --cone given and the fixture names none");
    return {std::move(*fx), parse_cone_spec(spec, cfg.eps_cone, cfg.eps_interior)};
  }
};

Coord to_coord(const std::vector<double>& v) {
  if (v.empty()) return Coord{};
  return Coord(ConstSpan(v.data(), v.size()));
}

double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cone-ordered set-valued minimax checks on gridded fixtures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* list = app.add_subcommand("list-fixtures", "List the registered fixtures");
  bool list_all = false;
  list->add_flag("--all", list_all, "Include auxiliary fixtures");

  auto* eval = app.add_subcommand("eval", "Print the sampled value F(x, y)");
  Common eval_common;
  FixtureArgs eval_fx;
  std::vector<double> ex, ey;
  eval_common.attach(eval);
  eval_fx.attach(eval, false);
  eval->add_option("--x", ex, "First argument")->required()->delimiter(',');
  eval->add_option("--y", ey, "Second argument")->delimiter(',');

  auto* check = app.add_subcommand("check", "Run one property check");
  Common check_common;
  FixtureArgs check_fx;
  std::string property, arg = "first", polarity = "convex";
  int z_grid = 0;
  check_common.attach(check);
  check_fx.attach(check, true);
  check->add_option("--property", property, "Property id, optionally kind[arg,polarity]")
      ->required();
  check->add_option("--arg", arg, "Argument")->check(CLI::IsMember({"first", "second"}));
  check->add_option("--polarity", polarity, "Polarity")
      ->check(CLI::IsMember({"convex", "concave"}));
  check->add_option("--z-grid", z_grid, "weakly_z targets: points per axis of [0,1]^d")
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run a theorem bundle and its certificate");
  Common verify_common;
  FixtureArgs verify_fx;
  std::string theorem;
  verify_common.attach(verify);
  verify_fx.attach(verify, true);
  verify->add_option("--theorem", theorem, "Theorem id")->required();

  auto* suite = app.add_subcommand("suite", "Run the worked-example regression matrix");
  Common suite_common;
  suite_common.attach(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*list) {
      auto names = builtin_fixture_names();
      if (list_all)
        for (const auto& n : auxiliary_fixture_names()) names.push_back(n);
      for (const auto& n : names) {
        const FixtureInfo info = fixture_info(n);
        std::cout << info.name << "\tcone=" << info.default_cone
                  << "\tcodomain=R^" << info.codomain_dim << "\targs=" << info.arity
                  << (info.single_valued ? "\tsingle-valued" : "\tset-valued") << "\t"
                  << info.description << "\n";
      }
      return 0;
    }

    if (*eval) {
      const ToleranceConfig cfg = eval_common.config();
      const SetValuedFixture fx = [&] {
        if (!eval_fx.file.empty())
          return load_fixture_file(eval_fx.file, cfg.fixture_params()).fixture;
        if (eval_fx.name.empty())
          throw InvalidInput("one of --fixture or --fixture-file is required");
        return make_fixture(eval_fx.name, cfg.fixture_params());
      }();
      const Coord x = to_coord(ex);
      const Coord y = fx.arity() == 1 && ey.empty() ? Coord{0.0} : to_coord(ey);
      if (fx.arity() == 2 && ey.empty()) throw InvalidInput("--y is required");
      const ValueSet v = fx.region(x, y);
      nlohmann::json j = {{"fixture", fx.name()},
                          {"x", ex},
                          {"y", ey},
                          {"value", v.describe()},
                          {"sample", v.sample(cfg.value_resolution).to_vectors()}};
      eval_common.emit(j.dump(2) + "\n");
      return 0;
    }

    if (*check) {
      const ToleranceConfig cfg = check_common.config();
      auto [fx, cone] = check_fx.load(cfg);
      PropertySpec spec = property.find('[') != std::string::npos
                              ? PropertySpec::parse(property)
                              : PropertySpec::parse(property + "[" + arg + "," + polarity + "]");
      CheckOptions opt;
      opt.cfg = cfg;
      if (z_grid > 0) opt.z_set = unit_z_grid(cone.dim(), z_grid);
      const auto start = std::chrono::steady_clock::now();
      const Verdict v = check_property(fx, cone, spec, opt);
      std::optional<bool> replayed;
      if (v.status == Status::refuted || v.status == Status::confirmed)
        replayed = replay(v, fx, cone, opt);
      RunReport report(cfg, check_common.timing);
      report.add_verdict(v, replayed, ms_since(start));
      check_common.emit(report.render(check_common.format));
      return exit_code(v.status);
    }

    if (*verify) {
      const ToleranceConfig cfg = verify_common.config();
      auto [fx, cone] = verify_fx.load(cfg);
      CheckOptions opt;
      opt.cfg = cfg;
      const auto start = std::chrono::steady_clock::now();
      const SuiteResult s = run_theorem_suite(fx, cone, theorem, opt);
      RunReport report(cfg, verify_common.timing);
      report.add_suite(s, ms_since(start));
      verify_common.emit(report.render(verify_common.format));
      return s.consistent() ? 0 : 1;
    }

    if (*suite) {
      const ToleranceConfig cfg = suite_common.config();
      const RunReport report = run_matrix(example_matrix(), cfg, suite_common.timing);
      suite_common.emit(report.render(suite_common.format));
      return report.exit_code();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
