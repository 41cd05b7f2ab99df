#ifndef CONEMM_DOMAIN_HPP
#define CONEMM_DOMAIN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "conemm/types.hpp"

namespace conemm {

/**
 * @brief Gridded domain: an interval, an axis-aligned box or a standard simplex.
 *
 * Grid coordinates sit on the lattice lo + (hi - lo) k / resolution. Queries
 * are snapped onto the finer lattice with denominator resolution * lattice_factor
 * (the lattice closed under the sampled convex combinations) so equal rationals
 * map to identical doubles.
 */
class DomainGrid {
 public:
  enum class Shape { interval, box, simplex };

  static DomainGrid interval(double lo, double hi, int resolution);
  static DomainGrid box(Vec lo, Vec hi, int resolution);
  /// Standard simplex Delta_{n-1} in R^n with the barycentric lattice.
  static DomainGrid simplex(int n, int resolution);

  Shape shape() const { return shape_; }
  int dim() const { return static_cast<int>(lo_.size()); }
  int resolution() const { return resolution_; }
  const Vec& lo() const { return lo_; }
  const Vec& hi() const { return hi_; }

  /// Lattice points followed by any extra points, in a fixed order.
  const std::vector<Coord>& points() const { return points_; }
  std::size_t lattice_count() const { return lattice_count_; }

  /// Appends off-lattice grid points (kept only if inside the domain).
  void add_extra_points(const std::vector<Coord>& extra);

  bool contains(const Coord& x, double tol = 1e-12) const;

  /**
   * @brief Canonical representative of x.
   *
   * Each coordinate within 1e-12 of the lattice with denominator
   * resolution * lattice_factor is replaced by the exact lattice value; other
   * coordinates pass through. Throws InvalidInput when x is off-domain.
   */
  Coord snap(const Coord& x, int lattice_factor) const;

  /// Canonical double for lattice index k over denominator den on axis a.
  double lattice_value(int axis, long long k, long long den) const;

  /// Same shape and bounds at another resolution (extra points dropped).
  DomainGrid with_resolution(int resolution) const;

  static std::size_t expected_lattice_count(Shape shape, int dim, int resolution);

  std::string describe() const;
  static std::string to_string(Shape shape);

  friend bool operator==(const DomainGrid& a, const DomainGrid& b) {
    return a.shape_ == b.shape_ && a.resolution_ == b.resolution_ &&
           a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.points_ == b.points_;
  }

 private:
  Shape shape_ = Shape::interval;
  int resolution_ = 1;
  Vec lo_, hi_;
  std::vector<Coord> points_;
  std::size_t lattice_count_ = 0;
};

/// Convex weights on Delta_{n-1}.
class Weights {
 public:
  explicit Weights(Vec lambda, double tol = 1e-9);
  const Vec& lambda() const { return lambda_; }
  int n() const { return static_cast<int>(lambda_.size()); }

 private:
  Vec lambda_;
};

/// All lattice points k / (steps - 1) of Delta_{n-1}, in lexicographic order
/// of the integer numerators (largest first coordinate first).
std::vector<Vec> simplex_lattice(int n, int steps);

/// Integer numerators matching simplex_lattice, summing to steps - 1.
std::vector<std::vector<int>> simplex_lattice_numerators(int n, int steps);

/// sum_i lambda_i x_i computed coordinatewise.
Coord combine(const std::vector<Coord>& xs, const Vec& lambda);

}  // namespace conemm

#endif  // CONEMM_DOMAIN_HPP
