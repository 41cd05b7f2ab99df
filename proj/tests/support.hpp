#ifndef CONEMM_TESTS_SUPPORT_HPP
#define CONEMM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "conemm/checks.hpp"
#include "conemm/extremal.hpp"
#include "conemm/fixture.hpp"
#include "conemm/fixture_library.hpp"

namespace conemm::test {

/// Coarse settings that keep a full check well under a second.
inline ToleranceConfig small_config(int resolution = 10) {
  ToleranceConfig cfg;
  cfg.grid_resolution = resolution;
  cfg.value_resolution = 21;
  cfg.lambda_steps = 6;
  cfg.n_max = 2;
  return cfg;
}

inline CheckOptions options(const ToleranceConfig& cfg) {
  CheckOptions opt;
  opt.cfg = cfg;
  return opt;
}

/// Convexity-type properties; alpha, gamma and weakly_z are existence conditions.
inline bool convexity_kind(PropertyKind k) {
  switch (k) {
    case PropertyKind::alpha:
    case PropertyKind::alpha_prime:
    case PropertyKind::gamma:
    case PropertyKind::gamma_prime:
    case PropertyKind::weakly_z:
      return false;
    default:
      return true;
  }
}

/// Random finite sets on an integer lattice so orthant comparisons are exact.
class CloudGen {
 public:
  explicit CloudGen(std::uint64_t seed) : rng_(seed) {}

  PointCloud lattice(int dim, int size, int span) {
    std::uniform_int_distribution<int> coord(-span, span);
    PointCloud out(dim);
    Vec p(dim);
    for (int i = 0; i < size; ++i) {
      for (auto& c : p) c = coord(rng_);
      out.push_back(p);
    }
    return out;
  }

  PointCloud real(int dim, int size) {
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    PointCloud out(dim);
    Vec p(dim);
    for (int i = 0; i < size; ++i) {
      for (auto& c : p) c = coord(rng_);
      out.push_back(p);
    }
    return out;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/**
 * Extremal points for +/- orthant orders by the textbook definitions, written
 * without the library's Cone. sign = +1 for R^d_+, -1 for -R^d_+.
 */
inline std::vector<Vec> orthant_extremal(const PointCloud& a, int sign, ExtremalMode mode) {
  std::vector<Vec> pts = a.to_vectors();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const bool upper = mode == ExtremalMode::max || mode == ExtremalMode::max_w;
  const bool weak = mode == ExtremalMode::min_w || mode == ExtremalMode::max_w;
  // b "beats" z when b - z points into the cone direction we are escaping.
  auto beats = [&](const Vec& b, const Vec& z) {
    bool all_ge = true, all_gt = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      double d = sign * (b[i] - z[i]);
      if (!upper) d = -d;
      all_ge = all_ge && d >= 0;
      all_gt = all_gt && d > 0;
    }
    return weak ? all_gt : (all_ge && b != z);
  };
  std::vector<Vec> out;
  for (const auto& z : pts) {
    bool keep = true;
    for (const auto& b : pts)
      if (beats(b, z)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(z);
  }
  return out;
}

/// Same map with every value negated, built as a separate fixture.
inline SetValuedFixture negated_fixture(const SetValuedFixture& fx) {
  std::vector<Branch> branches;
  for (const auto& b : fx.rule().branches()) {
    auto value = b.value;
    branches.push_back(
        Branch{b.label, b.when, [value](const Coord& x, const Coord& y) {
                 return value(x, y).negated();
               }});
  }
  SetValuedFixture out("neg_" + fx.name(), fx.first_grid(), fx.second_grid(),
                       fx.codomain_dim(), PiecewiseRule(std::move(branches)), fx.params(),
                       fx.single_valued(), fx.arity(), fx.description());
  for (const auto& c : fx.witness_curves()) out.add_witness_curve(c);
  return out;
}

/// -F^T as a separate fixture: arguments swapped and values negated.
inline SetValuedFixture mirrored_fixture(const SetValuedFixture& fx) {
  std::vector<Branch> branches;
  for (const auto& b : fx.rule().branches()) {
    auto when = b.when;
    auto value = b.value;
    branches.push_back(Branch{
        b.label, [when](const Coord& x, const Coord& y) { return when(y, x); },
        [value](const Coord& x, const Coord& y) { return value(y, x).negated(); }});
  }
  return SetValuedFixture("mirror_" + fx.name(), fx.second_grid(), fx.first_grid(),
                          fx.codomain_dim(), PiecewiseRule(std::move(branches)), fx.params(),
                          fx.single_valued(), fx.arity(), fx.description());
}

inline std::vector<double> column(const PointCloud& c, int axis = 0) {
  std::vector<double> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c[i][axis]);
  return out;
}

}  // namespace conemm::test

#endif  // CONEMM_TESTS_SUPPORT_HPP
