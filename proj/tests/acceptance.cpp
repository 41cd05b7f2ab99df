// Acceptance runner: one pass/fail line per criterion, selectable with --criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "conemm/checks.hpp"
#include "conemm/config.hpp"
#include "conemm/extremal.hpp"
#include "conemm/fixture_library.hpp"
#include "conemm/minimax.hpp"
#include "conemm/report.hpp"
#include "conemm/theorem_suite.hpp"
#include "support.hpp"

namespace {

using namespace conemm;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

/// Collects named sub-checks; the criterion passes iff all of them do.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    std::cout << "    [" << (ok ? "ok" : "FAIL") << "] " << what << "\n";
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
};

std::string fmt(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string fmt(const std::optional<Vec>& v) { return v ? fmt(*v) : "none"; }

std::string fmt(const Coord& c) {
  Vec v;
  for (int i = 0; i < c.dim(); ++i) v.push_back(c[i]);
  return fmt(v);
}

bool near(const std::optional<Vec>& a, const Vec& b, double tol) {
  if (!a || a->size() != b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (std::abs((*a)[i] - b[i]) > tol) return false;
  return true;
}

Cone cone_of(const std::string& fixture, const ToleranceConfig& cfg) {
  return parse_cone_spec(fixture_info(fixture).default_cone, cfg.eps_cone, cfg.eps_interior);
}

CheckOptions options(const ToleranceConfig& cfg) {
  CheckOptions o;
  o.cfg = cfg;
  return o;
}

std::vector<std::string> all_fixtures() {
  auto names = builtin_fixture_names();
  for (const auto& n : auxiliary_fixture_names()) names.push_back(n);
  return names;
}

// 1. Extremal facts on random finite sets.
bool criterion1(Ledger& L) {
  const auto start = Clock::now();
  test::CloudGen gen(ToleranceConfig{}.seed);
  for (const char* name : {"Rplus", "minusRplus", "R2plus", "minusR2plus", "R3plus"}) {
    const Cone cone = Cone::from_name(name);
    int facts = 0, nested = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int size = gen.uniform(1, 200);
      // Half the sets sit on a coarse lattice so ties and repeats occur.
      const PointCloud a =
          trial % 2 ? gen.real(cone.dim(), size) : gen.lattice(cone.dim(), size, 4);
      if (check_extremal_facts(a, cone).all()) ++facts;
      const PointCloud mn = extremal_points(a, cone, ExtremalMode::min);
      const PointCloud mnw = extremal_points(a, cone, ExtremalMode::min_w);
      const PointCloud mx = extremal_points(a, cone, ExtremalMode::max);
      const PointCloud mxw = extremal_points(a, cone, ExtremalMode::max_w);
      bool sub = true;
      for (std::size_t i = 0; i < mn.size(); ++i) sub = sub && mnw.contains_near(mn[i], 0.0);
      for (std::size_t i = 0; i < mx.size(); ++i) sub = sub && mxw.contains_near(mx[i], 0.0);
      if (sub) ++nested;
    }
    L.expect(facts == 1000, std::string(name) + ": six facts hold on " + std::to_string(facts) +
                                "/1000 sets");
    L.expect(nested == 1000, std::string(name) + ": Min in Min_w and Max in Max_w on " +
                                 std::to_string(nested) + "/1000 sets");
  }
  const double t = seconds_since(start);
  L.expect(t < 10.0, "runtime " + std::to_string(t) + " s < 10 s");
  return L.ok();
}

// 2. Certificate values at resolution 50.
bool criterion2(Ledger& L) {
  const ToleranceConfig cfg;
  const double tol = 1e-6;
  auto suite = [&](const std::string& fx, const std::string& thm) {
    const auto start = Clock::now();
    SuiteResult s = run_theorem_suite(make_fixture(fx, cfg.fixture_params()), cone_of(fx, cfg),
                                      thm, options(cfg));
    const double t = seconds_since(start);
    L.expect(t < 60.0, fx + "/" + thm + " runtime " + std::to_string(t) + " s < 60 s");
    L.expect(s.consistent(), fx + "/" + thm + " overall " + s.overall());
    return s;
  };

  for (const auto& [fx, thm] : std::vector<std::pair<std::string, std::string>>{
           {"ex4_2", "cor41_i"}, {"ex4_3", "cor43_i"}}) {
    const auto s = suite(fx, thm);
    L.expect(near(s.certificate.z1, {1.0}, tol) && near(s.certificate.z2, {1.0}, tol),
             fx + "/" + thm + " z1=" + fmt(s.certificate.z1) + " z2=" + fmt(s.certificate.z2) +
                 " (want (1),(1))");
  }

  {
    const auto s = suite("ex4_1", "thm42_i");
    L.expect(near(s.certificate.z1, {0.0, 0.0}, tol) && near(s.certificate.z2, {0.0, 0.0}, tol),
             "ex4_1/thm42_i z1=" + fmt(s.certificate.z1) + " z2=" + fmt(s.certificate.z2) +
                 " (want (0,0),(0,0))");
  }

  {
    const auto s = suite("ex4_6", "thm45");
    const auto& mins = s.certificate.z1_home.extremal;
    const bool is_one = mins.size() == 1 && std::abs(mins[0][0] - 1.0) <= tol;
    std::string got;
    for (const auto& p : mins.to_vectors()) got += fmt(p);
    L.expect(is_one, "ex4_6/thm45 Min set " + got + " (want {(1)})");
    L.expect(s.certificate.holds, "ex4_6/thm45 Min set lies in Max diag - S");
  }

  {
    const auto s = suite("ex4_7", "cor44");
    const auto& mins = s.certificate.z1_home.extremal;
    // Sampled L-shape {1} x [0,1] union [0,1] x {1}.
    PointCloud shape(2);
    for (int k = 0; k <= cfg.grid_resolution; ++k) {
      const double t = static_cast<double>(k) / cfg.grid_resolution;
      shape.push_back(Vec{1.0, t});
      shape.push_back(Vec{t, 1.0});
    }
    const double h = mins.empty() ? 1e9 : hausdorff_distance(mins, shape);
    L.expect(h <= 2.0 / cfg.grid_resolution,
             "ex4_7/cor44 Min set (" + std::to_string(mins.size()) +
                 " points) Hausdorff distance to L-shape " + std::to_string(h) + " <= 0.04");
  }
  return L.ok();
}

// 3. Refutations.
bool criterion3(Ledger& L) {
  const ToleranceConfig cfg;
  const CheckOptions opt = options(cfg);
  auto check = [&](const std::string& fx, const std::string& prop) {
    const auto f = make_fixture(fx, cfg.fixture_params());
    const Cone c = cone_of(fx, cfg);
    Verdict v = check_property(f, c, PropertySpec::parse(prop), opt);
    L.expect(v.status == Status::refuted, fx + "/" + prop + " -> " + to_string(v.status));
    if (v.status == Status::refuted)
      L.expect(replay(v, f, c, opt), fx + "/" + prop + " witness replays");
    return v;
  };

  check("ex3_2", "pair_properly_v[first,convex]");
  {
    const auto f = make_fixture("ex3_2", cfg.fixture_params());
    const double lambda = (0.25 - 0.2) / (0.25 - 1.0 / 15);
    const PairDisjuncts d = pair_properly_disjuncts(
        f, cone_of("ex3_2", cfg), PropertySpec::parse("pair_properly_v[first,convex]"),
        {1.0 / 15}, {0.9}, {0.25}, {0.2}, lambda, opt);
    L.expect(!d.first && !d.second,
             "ex3_2 configuration (1/15,9/10),(1/4,1/5), x0=1/5 fails both disjuncts");
  }

  {
    const Verdict v = check("ex3_6", "transfer_mu_v[first,convex]");
    const bool at_zero = v.witness.y.size() == 1 && v.witness.y[0][0] == 0.0;
    L.expect(at_zero, "ex3_6 refutation uses z = 0");
  }

  check("ex2_1", "wcg[first,convex]");
  {
    const auto f = make_fixture("ex2_1", cfg.fixture_params());
    const Verdict t = check_wcg_tuple(f, cone_of("ex2_1", cfg), {{1.0}, {3.0}}, opt);
    L.expect(t.status == Status::refuted, "ex2_1 tuple (1,3) -> " + to_string(t.status));
  }

  check("rem4_2", "transfer_properly_iii[first,concave]");
  return L.ok();
}

// 4. Confirmations.
bool criterion4(Ledger& L) {
  const ToleranceConfig cfg;
  const CheckOptions opt = options(cfg);
  auto check = [&](const std::string& fx, const std::string& prop, Status want,
                   std::vector<Vec> z_set = {}) {
    const auto f = make_fixture(fx, cfg.fixture_params());
    const Cone c = cone_of(fx, cfg);
    CheckOptions o = opt;
    o.z_set = std::move(z_set);
    Verdict v = check_property(f, c, PropertySpec::parse(prop), o);
    L.expect(v.status == want, fx + "/" + prop + " -> " + to_string(v.status));
    if (v.status == Status::confirmed)
      L.expect(replay(v, f, c, o), fx + "/" + prop + " confirmation replays");
    return v;
  };

  check("ex3_1", "transfer_mu_v[first,convex]", Status::not_refuted);
  const Verdict alpha = check("ex3_1", "alpha[first,convex]", Status::confirmed);
  {
    const auto f = make_fixture("ex3_1", cfg.fixture_params());
    const Cone c = cone_of("ex3_1", cfg);
    bool all_one = true;
    for (const auto& x : f.first_grid().points()) {
      const auto top =
          extremal_points(union_over_second(FixtureView(f), x), c, ExtremalMode::max_w);
      all_one = all_one && top.size() == 1 && top[0][0] == 1.0;
    }
    L.expect(all_one, "ex3_1 Max_w of every row union is {1}");
    bool table_one = !alpha.table.empty();
    for (const auto& w : alpha.table) table_one = table_one && w.values.at(0) == Vec{1.0};
    L.expect(table_one, "ex3_1 alpha picks z_x = 1 at every x");
  }

  {
    const Verdict g = check("ex3_8", "gamma[first,convex]", Status::confirmed);
    const bool y_one = !g.witness.y.empty() && g.witness.y.back()[0] == 1.0;
    L.expect(y_one, "ex3_8 gamma y* = " +
                        (g.witness.y.empty() ? std::string("none") : fmt(g.witness.y.back())));
  }

  check("ex3_7", "transfer_properly_iii[first,concave]", Status::not_refuted);

  {
    const auto zs = unit_z_grid(1, 21);
    const Verdict w = check("ex4_4", "weakly_z[first,convex]", Status::confirmed, zs);
    L.expect(w.strategy_targets.size() == zs.size(),
             "ex4_4 strategy covers " + std::to_string(w.strategy_targets.size()) +
                 "/21 targets");
  }
  return L.ok();
}

// 5. Property suites.
bool criterion5(Ledger& L) {
  const ToleranceConfig cfg;
  {
    const nlohmann::json report = run_matrix(example_matrix(), cfg, false).to_json();
    int decisive = 0, replayed = 0;
    for (const auto& c : report.at("checks")) {
      const std::string st = c.at("status");
      if (c.at("kind") != "property" || (st != "Refuted" && st != "Confirmed")) continue;
      ++decisive;
      if (c.at("detail").value("replayed", false)) ++replayed;
    }
    L.expect(decisive > 0 && replayed == decisive,
             "matrix witnesses replay: " + std::to_string(replayed) + "/" +
                 std::to_string(decisive));
  }

  {
    ToleranceConfig small = test::small_config(10);
    const CheckOptions opt = options(small);
    int compared = 0, agree = 0;
    for (const auto& name : builtin_fixture_names()) {
      const auto fx = make_fixture(name, small.fixture_params());
      const auto neg = test::negated_fixture(fx);
      const Cone c = cone_of(name, small);
      for (auto kind : all_property_kinds()) {
        if (kind == PropertyKind::weakly_z) continue;
        for (auto arg : {Arg::first, Arg::second}) {
          std::optional<Status> a, b;
          try {
            a = check_property(fx, c, {kind, arg, Polarity::concave}, opt).status;
          } catch (const InvalidInput&) {
          }
          try {
            b = check_property(neg, c, {kind, arg, Polarity::convex}, opt).status;
          } catch (const InvalidInput&) {
          }
          if (!a && !b) continue;
          ++compared;
          if (a == b) ++agree;
        }
      }
    }
    L.expect(compared > 0 && agree == compared,
             "polarity duality at resolution 10: " + std::to_string(agree) + "/" +
                 std::to_string(compared) + " verdicts agree");
  }

  {
    const ToleranceConfig small = test::small_config(10);
    int total = 0, ok = 0;
    for (const char* name : {"const_A0", "const_B0"}) {
      const auto fx = make_fixture(name, small.fixture_params());
      const Cone c = cone_of(name, small);
      for (auto kind : all_property_kinds()) {
        if (!test::convexity_kind(kind)) continue;
        for (auto arg : {Arg::first, Arg::second})
          for (auto pol : {Polarity::convex, Polarity::concave}) {
            try {
              const Verdict v = check_property(fx, c, {kind, arg, pol}, options(small));
              ++total;
              if (!is_failure(v.status)) ++ok;
            } catch (const InvalidInput&) {
            }
          }
      }
    }
    L.expect(total > 0 && ok == total, "constant maps hold every applicable property: " +
                                           std::to_string(ok) + "/" + std::to_string(total));
  }

  {
    ToleranceConfig coarse, fine;
    coarse.grid_resolution = 25;
    int refuted = 0, persisted = 0;
    for (const auto& e : example_matrix()) {
      if (e.kind != ReportEntry::Kind::property) continue;
      const auto spec = PropertySpec::parse(e.id);
      if (is_existential(spec.kind)) continue;
      const Cone c = parse_cone_spec(e.cone);
      const Verdict v =
          check_property(make_fixture(e.fixture, coarse.fixture_params()), c, spec,
                         options(coarse));
      if (v.status != Status::refuted) continue;
      ++refuted;
      if (replay(v, make_fixture(e.fixture, fine.fixture_params()), c, options(fine)))
        ++persisted;
    }
    L.expect(refuted > 0 && persisted == refuted,
             "refutation witnesses from resolution 25 hold at 50: " +
                 std::to_string(persisted) + "/" + std::to_string(refuted));
  }
  return L.ok();
}

// 6. Diagonal witness to certificate.
bool criterion6(Ledger& L) {
  const ToleranceConfig cfg;
  int with_witness = 0;
  for (const auto& name : all_fixtures()) {
    const auto fx = make_fixture(name, cfg.fixture_params());
    if (!fx.square()) continue;
    const Cone c = cone_of(name, cfg);
    const auto w = find_diagonal_witness(fx, c, DiagonalMode::max_w_side, cfg);
    if (!w) {
      std::cout << "    [--] " << name << ": no diagonal witness\n";
      continue;
    }
    ++with_witness;
    const auto cert = verify_minimax(fx, c, Conclusion::pair_i, cfg);
    L.expect(cert.holds && validate_certificate(cert, c),
             name + ": witness at x*=" + fmt(w->x) +
                 ", certificate z1=" + fmt(cert.z1) + " z2=" + fmt(cert.z2));
  }
  L.expect(with_witness > 0, std::to_string(with_witness) + " fixtures with a witness");
  return L.ok();
}

// 7. Byte-stable suite report.
bool criterion7(Ledger& L, const std::string& cli) {
  if (cli.empty() || !std::filesystem::exists(cli)) {
    L.expect(false, "command line tool not found at '" + cli + "'");
    return false;
  }
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> reports;
  for (int run = 1; run <= 2; ++run) {
    const auto out = dir / ("conemm_suite_" + std::to_string(run) + ".json");
    const std::string cmd = "\"" + cli + "\" suite --out \"" + out.string() + "\"";
    const auto start = Clock::now();
    const int rc = std::system(cmd.c_str());
    const double t = seconds_since(start);
    L.expect(rc == 0, "run " + std::to_string(run) + " exit status " + std::to_string(rc));
    L.expect(t < 300.0, "run " + std::to_string(run) + " took " + std::to_string(t) +
                            " s < 300 s");
    std::ifstream in(out, std::ios::binary);
    reports.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::filesystem::remove(out);
  }
  L.expect(!reports[0].empty() && reports[0] == reports[1],
           "reports are byte-identical (" + std::to_string(reports[0].size()) + " bytes)");
  return L.ok();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  int only = 0;
  std::string cli;
  app.add_option("--criterion", only, "Run a single criterion (1-7)")->check(CLI::Range(1, 7));
  app.add_option("--cli", cli, "Path to the conemm executable (criterion 7)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<bool(Ledger&)>>> criteria = {
      {"extremal facts on random sets", criterion1},
      {"certificate regression", criterion2},
      {"refutation regression", criterion3},
      {"confirmation regression", criterion4},
      {"property suites", criterion5},
      {"diagonal witness chain", criterion6},
      {"deterministic suite report", [&](Ledger& L) { return criterion7(L, cli); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (only && only != n) continue;
    Ledger L;
    bool ok = false;
    try {
      ok = criteria[i].second(L);
    } catch (const std::exception& e) {
      std::cout << "    [FAIL] exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << criteria[i].first
              << std::endl;
    all = all && ok;
  }
  return all ? 0 : 1;
}
