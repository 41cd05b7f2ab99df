/**
 * @file cone.hpp
 * @brief Polyhedral ordering cones in halfspace form.
 *
 * A cone S is stored as a list of unit normals n_j with z in S iff
 * n_j . z >= 0 for every j. Floating point membership uses two margins:
 * eps_cone relaxes the closed test, eps_interior is the margin demanded by
 * the strict (interior) test.
 */

#ifndef CONEMM_CONE_HPP
#define CONEMM_CONE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conemm/point_cloud.hpp"
#include "conemm/types.hpp"

namespace conemm {

inline constexpr double kDefaultEpsCone = 1e-9;
inline constexpr double kDefaultEpsInterior = 1e-9;

/// Which translate B + S or B - S a containment query refers to.
enum class Sign { plus, minus };

class Cone {
 public:
  /**
   * @brief Builds a cone from outward normals.
   *
   * Normals are rescaled to unit length. When no interior witness is given one
   * is derived (exactly for simplicial cones); construction fails if the
   * witness does not clear eps_interior on every halfspace.
   */
  Cone(std::vector<Vec> normals, std::optional<Vec> interior_witness = {},
       double eps_cone = kDefaultEpsCone,
       double eps_interior = kDefaultEpsInterior, std::string name = {});

  /// [0, inf) in R.
  static Cone nonneg_reals();
  /// R^d_+.
  static Cone nonneg_orthant(int dim);
  /// -R^d_+.
  static Cone nonpos_orthant(int dim);
  /// Built-in names: Rplus, R2plus, minusR2plus, R3plus, minusRplus.
  static Cone from_name(std::string_view name);

  int dim() const { return dim_; }
  const std::vector<Vec>& normals() const { return normals_; }
  const Vec& interior_witness() const { return witness_; }
  double eps_cone() const { return eps_cone_; }
  double eps_interior() const { return eps_interior_; }
  const std::string& name() const { return name_; }

  bool contains(ConstSpan z) const;
  bool contains_interior(ConstSpan z) const;

  /// a in b + S
  bool dominates(ConstSpan a, ConstSpan b) const;
  /// a in b + int S
  bool dominates_interior(ConstSpan a, ConstSpan b) const;

  /// Sum of normal projections; strictly increasing along S \ {0}.
  double order_key(ConstSpan z) const;

  /// -S with the same tolerances.
  Cone negated() const;
  Cone with_tolerances(double eps_cone, double eps_interior) const;

  bool simplicial() const { return !inverse_.empty(); }
  /// Least upper bound of a and b in the cone order (simplicial cones only).
  std::optional<Vec> join(ConstSpan a, ConstSpan b) const;

  /// No sampled unit direction z has both z and -z in S.
  bool is_pointed_sampled(int resolution) const;

  std::string describe() const;

 private:
  void check_dim(ConstSpan z) const;

  int dim_ = 0;
  std::vector<Vec> normals_;
  Vec witness_;
  Vec key_normal_;
  std::vector<Vec> inverse_;  // inverse of the normal matrix when square
  double eps_cone_ = kDefaultEpsCone;
  double eps_interior_ = kDefaultEpsInterior;
  std::string name_;
};

bool cone_contains(const Cone& cone, ConstSpan z, bool interior = false);

/**
 * @brief Elementwise containment of A in B + S (plus) or B - S (minus).
 *
 * Rejects empty clouds and mismatched dimensions.
 */
bool subset_of_translate(const PointCloud& a, const PointCloud& b,
                         const Cone& cone, Sign sign);

/// Same as subset_of_translate with int S in place of S.
bool subset_of_translate_interior(const PointCloud& a, const PointCloud& b,
                                  const Cone& cone, Sign sign);

/// Stored cone relation between two operands, re-evaluable on demand.
struct ConeRelation {
  enum class Kind { in_plus, in_minus, subset_minus, subset_plus };

  Kind kind = Kind::in_plus;
  double eps_cone = kDefaultEpsCone;
  double eps_interior = kDefaultEpsInterior;
  PointCloud lhs;
  PointCloud rhs;

  /// Re-evaluates with the stored tolerances applied to `cone`'s normals.
  bool evaluate(const Cone& cone) const;
};

std::string to_string(ConeRelation::Kind kind);

}  // namespace conemm

#endif  // CONEMM_CONE_HPP
