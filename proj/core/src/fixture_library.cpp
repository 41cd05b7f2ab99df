#include "conemm/fixture_library.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>

#include "conemm/curves.hpp"

namespace conemm {
namespace {

using Box = ValueSet::Box;

double X(const Coord& c) { return c[0]; }

Branch br(std::string label, std::function<bool(double, double)> when,
          std::function<ValueSet(double, double)> value) {
  return Branch{std::move(label),
                [w = std::move(when)](const Coord& x, const Coord& y) { return w(X(x), X(y)); },
                [v = std::move(value)](const Coord& x, const Coord& y) { return v(X(x), X(y)); }};
}

ValueSet iv(double lo, double hi) { return ValueSet::interval(lo, hi); }
ValueSet pt(double a) { return ValueSet::point(std::array<double, 1>{a}); }
ValueSet pt2(double a, double b) { return ValueSet::point(std::array<double, 2>{a, b}); }

// Shared shape "[a(x,y), y] below/above the diagonal" used by several examples.
PiecewiseRule diag_rule(std::function<ValueSet(double, double)> upper,
                        std::function<ValueSet(double, double)> lower) {
  return PiecewiseRule({br("x<=y", [](double x, double y) { return x <= y; }, std::move(upper)),
                        br("y<x", [](double x, double y) { return y < x; }, std::move(lower))});
}

struct Entry {
  FixtureInfo info;
  std::function<SetValuedFixture(const FixtureParams&)> build;
};

SetValuedFixture square(const std::string& name, const FixtureParams& p, int dim,
                        PiecewiseRule rule, bool single = false,
                        const std::string& desc = {}) {
  DomainGrid g = DomainGrid::interval(0.0, 1.0, p.grid_resolution);
  return SetValuedFixture(name, g, g, dim, std::move(rule), p, single, 2, desc);
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> reg = [] {
    std::map<std::string, Entry> m;
    auto add = [&](FixtureInfo info, std::function<SetValuedFixture(const FixtureParams&)> b) {
      const std::string key = info.name;
      m.emplace(key, Entry{std::move(info), std::move(b)});
    };

    add({"ex2_1", "F(x) = [0,2] for x<2, [-2,0] at x=2, (0,2] for x>2 on [0,4]", "Rplus", 1, 1},
        [](const FixtureParams& p) {
          PiecewiseRule rule({br("x<2", [](double x, double) { return x < 2.0; },
                                 [](double, double) { return iv(0.0, 2.0); }),
                              br("x=2", [](double x, double) { return x == 2.0; },
                                 [](double, double) { return iv(-2.0, 0.0); }),
                              br("x>2", [](double x, double) { return x > 2.0; },
                                 [](double, double) { return ValueSet::interval(0.0, 2.0, true, false); })});
          SetValuedFixture fx("ex2_1", DomainGrid::interval(0.0, 4.0, p.grid_resolution),
                              DomainGrid::interval(0.0, 0.0, 1), 1, std::move(rule), p,
                              false, 1, "jump map on [0,4]");
          fx.add_witness_curve(std::make_shared<GateCurve>(2.0));
          return fx;
        });

    add({"ex3_1", "[-1,y] if x<=y, [-x,y] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex3_1", p, 1,
                    diag_rule([](double, double y) { return iv(-1.0, y); },
                              [](double x, double y) { return iv(-x, y); }));
    });

    add({"ex3_2", "disc pieces S, S+, S- of radius x; {(0,0)} at x=0", "R2plus", 2},
        [](const FixtureParams& p) {
          const Box full{-1, 1, -1, 1}, plus{0, 1, -1, 1}, minus{-1, 0, -1, 1};
          PiecewiseRule rule(
              {br("x=1", [](double x, double) { return x == 1.0; },
                  [full](double, double) { return ValueSet::disc(0, 0, 1.0, full); }),
               br("0<x<1, x<=y", [](double x, double y) { return 0.0 < x && x < 1.0 && x <= y; },
                  [plus](double x, double) { return ValueSet::disc(0, 0, x, plus); }),
               // y = 0 < x < 1 is not covered by the displayed cases; it joins S-.
               br("0<=y<x<1", [](double x, double y) { return 0.0 <= y && y < x && x < 1.0; },
                  [minus](double x, double) { return ValueSet::disc(0, 0, x, minus); }),
               br("x=0", [](double x, double) { return x == 0.0; },
                  [](double, double) { return pt2(0.0, 0.0); })});
          return square("ex3_2", p, 2, std::move(rule));
        });

    add({"ex3_3", "[0,y] if x<=y, [-x,y] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex3_3", p, 1,
                    diag_rule([](double, double y) { return iv(0.0, y); },
                              [](double x, double y) { return iv(-x, y); }));
    });

    add({"ex3_4", "f = 1 if x<=y, x if y<x", "Rplus", 1, 2, true}, [](const FixtureParams& p) {
      return square("ex3_4", p, 1,
                    diag_rule([](double, double) { return pt(1.0); },
                              [](double x, double) { return pt(x); }),
                    true);
    });

    add({"ex3_5", "[-1,1] if x<=y, [-x,1] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex3_5", p, 1,
                    diag_rule([](double, double) { return iv(-1.0, 1.0); },
                              [](double x, double) { return iv(-x, 1.0); }));
    });

    add({"ex3_6", "disc of radius x centred (0,y) for rational y, (y,0) otherwise", "R2plus", 2},
        [](const FixtureParams& p) {
          const int r = p.grid_resolution;
          PiecewiseRule rule(
              {br("y rational", [r](double, double y) { return !on_irrational_subgrid(y, r); },
                  [](double x, double y) { return ValueSet::disc(0.0, y, x); }),
               br("y irrational", [r](double, double y) { return on_irrational_subgrid(y, r); },
                  [](double x, double y) { return ValueSet::disc(y, 0.0, x); })});
          // Only y selects the branch, so only the second grid carries the offset points.
          const DomainGrid xs = DomainGrid::interval(0.0, 1.0, r);
          DomainGrid ys = xs;
          ys.add_extra_points(irrational_subgrid(r));
          return SetValuedFixture("ex3_6", xs, ys, 2, std::move(rule), p, false, 2,
                                  "branch on the irrational offset grid");
        });

    add({"ex3_7", "[0,y] if x<=y, [-x,y] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex3_7", p, 1,
                    diag_rule([](double, double y) { return iv(0.0, y); },
                              [](double x, double y) { return iv(-x, y); }));
    });

    add({"ex3_8", "[0,y] if x<=y, [-x,y] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex3_8", p, 1,
                    diag_rule([](double, double y) { return iv(0.0, y); },
                              [](double x, double y) { return iv(-x, y); }));
    });

    add({"rem4_2", "[0,1] on two horizontal pieces, {0} elsewhere", "Rplus"},
        [](const FixtureParams& p) {
          auto on = [](double x, double y) {
            return (0.25 <= x && x <= 0.75 && y == 1.0) ||
                   ((x <= 0.25 || x >= 0.75) && y == 0.5);
          };
          PiecewiseRule rule({br("pieces", on, [](double, double) { return iv(0.0, 1.0); }),
                              br("otherwise", [on](double x, double y) { return !on(x, y); },
                                 [](double, double) { return pt(0.0); })});
          return square("rem4_2", p, 1, std::move(rule));
        });

    add({"ex4_1", "{(0,0)} if x<=y, quarter disc of radius x if y<x", "minusR2plus", 2},
        [](const FixtureParams& p) {
          const Box q{0, 1, 0, 1};
          return square("ex4_1", p, 2,
                        diag_rule([](double, double) { return pt2(0.0, 0.0); },
                                  [q](double x, double) { return ValueSet::disc(0, 0, x, q); }));
        });

    add({"ex4_2", "[-1,1] if x<=y, [-x,1] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex4_2", p, 1,
                    diag_rule([](double, double) { return iv(-1.0, 1.0); },
                              [](double x, double) { return iv(-x, 1.0); }));
    });

    add({"ex4_3", "[0,y] if x<=y, [-x,y] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex4_3", p, 1,
                    diag_rule([](double, double y) { return iv(0.0, y); },
                              [](double x, double y) { return iv(-x, y); }));
    });

    add({"ex4_4", "[0,x] if x<=y, [0,1] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex4_4", p, 1,
                    diag_rule([](double x, double) { return iv(0.0, x); },
                              [](double, double) { return iv(0.0, 1.0); }));
    });

    add({"ex4_5", "f = (x,y) if x<=y, (1,y) if y<x", "R2plus", 2, 2, true},
        [](const FixtureParams& p) {
          return square("ex4_5", p, 2,
                        diag_rule([](double x, double y) { return pt2(x, y); },
                                  [](double, double y) { return pt2(1.0, y); }),
                        true);
        });

    add({"ex4_6", "[0,x] if x<=y, [0,1] if y<x", "Rplus"}, [](const FixtureParams& p) {
      return square("ex4_6", p, 1,
                    diag_rule([](double x, double) { return iv(0.0, x); },
                              [](double, double) { return iv(0.0, 1.0); }));
    });

    add({"ex4_7", "f = (x,y) if x<=y, (1,1) if y<x", "R2plus", 2, 2, true},
        [](const FixtureParams& p) {
          return square("ex4_7", p, 2,
                        diag_rule([](double x, double y) { return pt2(x, y); },
                                  [](double, double) { return pt2(1.0, 1.0); }),
                        true);
        });

    // Auxiliary maps.
    add({"const_A0", "constant map F = [0,1]", "Rplus", 1, 2, false, true},
        [](const FixtureParams& p) {
          return square("const_A0", p, 1,
                        PiecewiseRule({br("all", [](double, double) { return true; },
                                          [](double, double) { return iv(0.0, 1.0); })}));
        });
    add({"const_B0", "constant map F = disc of radius 1/2 at the origin", "R2plus", 2, 2, false, true},
        [](const FixtureParams& p) {
          return square("const_B0", p, 2,
                        PiecewiseRule({br("all", [](double, double) { return true; },
                                          [](double, double) { return ValueSet::disc(0, 0, 0.5); })}));
        });
    add({"diag_gap", "{0} on the diagonal, {1} elsewhere", "Rplus", 1, 2, false, true},
        [](const FixtureParams& p) {
          return square("diag_gap", p, 1,
                        PiecewiseRule({br("x=y", [](double x, double y) { return x == y; },
                                          [](double, double) { return pt(0.0); }),
                                       br("x!=y", [](double x, double y) { return x != y; },
                                          [](double, double) { return pt(1.0); })}));
        });
    add({"lin_id", "single-valued f(x) = x on [0,1]", "Rplus", 1, 1, true, true},
        [](const FixtureParams& p) {
          PiecewiseRule rule({br("all", [](double, double) { return true; },
                                 [](double x, double) { return pt(x); })});
          return SetValuedFixture("lin_id", DomainGrid::interval(0.0, 1.0, p.grid_resolution),
                                  DomainGrid::interval(0.0, 0.0, 1), 1, std::move(rule), p,
                                  true, 1, "identity map");
        });
    return m;
  }();
  return reg;
}

const std::vector<std::string>& builtin_order() {
  static const std::vector<std::string> names = {
      "ex2_1", "ex3_1", "ex3_2", "ex3_3", "ex3_4", "ex3_5", "ex3_6", "ex3_7", "ex3_8",
      "rem4_2", "ex4_1", "ex4_2", "ex4_3", "ex4_4", "ex4_5", "ex4_6", "ex4_7"};
  return names;
}

}  // namespace

std::vector<std::string> builtin_fixture_names() { return builtin_order(); }

std::vector<std::string> auxiliary_fixture_names() {
  return {"const_A0", "const_B0", "diag_gap", "lin_id"};
}

bool has_fixture(const std::string& name) { return registry().count(name) > 0; }

FixtureInfo fixture_info(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw InvalidInput("unknown fixture '" + name + "'");
  return it->second.info;
}

SetValuedFixture make_fixture(const std::string& name, FixtureParams params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw InvalidInput("unknown fixture '" + name + "'");
  if (params.grid_resolution <= 0) throw InvalidInput("grid resolution must be positive");
  return it->second.build(params);
}

bool on_irrational_subgrid(double y, int resolution) {
  const double c = 1.0 / std::numbers::sqrt2;
  double t = y - c;
  t -= std::floor(t);
  const double k = std::round(t * resolution);
  return std::abs(t - k / resolution) <= 1e-9;
}

std::vector<Coord> irrational_subgrid(int resolution) {
  const double c = 1.0 / std::numbers::sqrt2;
  std::vector<Coord> out;
  for (int k = 0; k < resolution; ++k) {
    double t = static_cast<double>(k) / resolution + c;
    t -= std::floor(t);
    out.push_back(Coord{t});
  }
  std::sort(out.begin(), out.end(), [](const Coord& a, const Coord& b) { return a[0] < b[0]; });
  return out;
}

}  // namespace conemm
