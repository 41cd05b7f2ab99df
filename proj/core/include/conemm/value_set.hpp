#ifndef CONEMM_VALUE_SET_HPP
#define CONEMM_VALUE_SET_HPP

#include <limits>
#include <string>

#include "conemm/point_cloud.hpp"
#include "conemm/types.hpp"

namespace conemm {

/**
 * @brief Closed-form value of a set-valued map at one argument pair.
 *
 * Supports exact membership tests and reproducible sampling. Intervals live
 * in R, discs (optionally clipped to an axis box) in R^2, finite point sets
 * in any dimension.
 */
class ValueSet {
 public:
  enum class Kind { interval, points, disc };

  struct Box {
    double ulo = -std::numeric_limits<double>::infinity();
    double uhi = std::numeric_limits<double>::infinity();
    double vlo = -std::numeric_limits<double>::infinity();
    double vhi = std::numeric_limits<double>::infinity();
  };

  ValueSet() = default;

  static ValueSet interval(double lo, double hi, bool open_lo = false,
                           bool open_hi = false);
  static ValueSet point(ConstSpan p);
  static ValueSet points(PointCloud cloud);
  static ValueSet disc(double cu, double cv, double radius);
  static ValueSet disc(double cu, double cv, double radius, Box clip);

  Kind kind() const { return kind_; }
  int dim() const;

  /// Deterministic sample; intervals use value_resolution points including
  /// closed endpoints, discs a polar grid scaled from 16 radii x 32 angles.
  PointCloud sample(int value_resolution) const;

  bool contains(ConstSpan p, double tol) const;

  ValueSet negated() const;

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool open_lo() const { return open_lo_; }
  bool open_hi() const { return open_hi_; }
  const PointCloud& point_set() const { return pts_; }
  double center_u() const { return cu_; }
  double center_v() const { return cv_; }
  double radius() const { return r_; }
  const Box& clip() const { return box_; }

  std::string describe() const;

  static int disc_radial_steps(int value_resolution);

 private:
  Kind kind_ = Kind::points;
  double lo_ = 0.0, hi_ = 0.0;
  bool open_lo_ = false, open_hi_ = false;
  PointCloud pts_;
  double cu_ = 0.0, cv_ = 0.0, r_ = 0.0;
  Box box_;
};

}  // namespace conemm

#endif  // CONEMM_VALUE_SET_HPP
