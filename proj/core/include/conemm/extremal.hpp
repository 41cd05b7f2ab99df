#ifndef CONEMM_EXTREMAL_HPP
#define CONEMM_EXTREMAL_HPP

#include <string>
#include <string_view>

#include "conemm/cone.hpp"
#include "conemm/point_cloud.hpp"

namespace conemm {

enum class ExtremalMode { min, min_w, max, max_w };

std::string to_string(ExtremalMode mode);
ExtremalMode parse_extremal_mode(std::string_view s);

/// The mode with the roles of +S and -S exchanged (min <-> max).
ExtremalMode mirrored(ExtremalMode mode);

/**
 * @brief Minimal, weakly minimal, maximal or weakly maximal points of A.
 *
 * The input is deduplicated at eps_cone first. For min/max a point is dropped
 * when another point dominates it and is not dominated back (so points that
 * are equal up to tolerance never eliminate each other). The weak modes drop
 * z when some a lies in z -/+ int S. Output is in lexicographic order.
 */
PointCloud extremal_points(const PointCloud& a, const Cone& cone,
                           ExtremalMode mode);

struct ExtremalFactsReport {
  bool min_nonempty = false;
  bool within_min_plus_cone = false;
  bool within_min_w_plus_interior = false;
  bool max_nonempty = false;
  bool within_max_minus_cone = false;
  bool within_max_w_minus_interior = false;

  bool all() const {
    return min_nonempty && within_min_plus_cone && within_min_w_plus_interior &&
           max_nonempty && within_max_minus_cone && within_max_w_minus_interior;
  }
};

/// Evaluates the six extremal-set facts that hold for every compact A.
ExtremalFactsReport check_extremal_facts(const PointCloud& a, const Cone& cone);

/**
 * @brief Pairwise convex combinations (1-t) a + t b, t = k / coeff_steps.
 *
 * Under-approximates co(A); exact on the real line once the extreme points
 * are in A.
 */
PointCloud convex_combination_samples(const PointCloud& a, int coeff_steps);

}  // namespace conemm

#endif  // CONEMM_EXTREMAL_HPP
