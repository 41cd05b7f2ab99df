#ifndef CONEMM_MINIMAX_HPP
#define CONEMM_MINIMAX_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "conemm/config.hpp"
#include "conemm/cone.hpp"
#include "conemm/extremal.hpp"
#include "conemm/fixture.hpp"
#include "conemm/value_set.hpp"

namespace conemm {

/// Conclusion forms shared by the minimax theorems and corollaries.
enum class Conclusion { pair_i, pair_ii, inclusion_i, inclusion_ii };

std::string to_string(Conclusion c);
Conclusion parse_conclusion(std::string_view s);

enum class DiagonalMode { max_w_side, min_w_side };
std::string to_string(DiagonalMode m);

struct DiagonalWitness {
  DiagonalMode mode = DiagonalMode::max_w_side;
  Coord x;
  ValueSet value;     ///< F(x*, x*)
  PointCloud slice;   ///< Max_w F(x*, X) or Min_w F(X, x*)
  Vec meet;           ///< a point of both
  nlohmann::json to_json() const;
};

/**
 * @brief First grid point x* whose diagonal value meets the weakly extremal
 * slice: Max_w F(x*, X) for max_w_side, Min_w F(X, x*) for min_w_side.
 */
std::optional<DiagonalWitness> find_diagonal_witness(const SetValuedFixture& fx,
                                                     const Cone& cone, DiagonalMode mode,
                                                     const ToleranceConfig& cfg = {});

struct ExtremalHome {
  std::string description;
  ExtremalMode mode = ExtremalMode::max;
  PointCloud source;
  PointCloud extremal;
  nlohmann::json to_json() const;
};

struct MinimaxCertificate {
  Conclusion conclusion = Conclusion::pair_i;
  bool holds = false;
  std::optional<Vec> z1, z2;
  ConeRelation relation;
  ExtremalHome z1_home, z2_home;
  std::optional<DiagonalWitness> diag_witness;
  /// Failure report: points of the left set without a partner.
  std::vector<Vec> missing;
  std::string note;

  nlohmann::json to_json() const;
};

/**
 * @brief Builds the conclusion certificate on the grids of @p fx.
 *
 * pair_i: z1 in Max of the diagonal union, z2 in Min of the union of
 * Max_w F(x, X), z1 in z2 + S. pair_ii mirrors with Min/Max and z2 - S.
 * inclusion_i: Min of the union of Max_w F(x, X) inside Max(diagonal) - S;
 * inclusion_ii: Max of the union of Min_w F(X, y) inside Min(diagonal) + S.
 * Pairs are scanned in lexicographic order.
 */
MinimaxCertificate verify_minimax(const SetValuedFixture& fx, const Cone& cone,
                                  Conclusion conclusion, const ToleranceConfig& cfg = {});

/// Re-checks a certificate from its stored sets only.
bool validate_certificate(const MinimaxCertificate& cert, const Cone& cone);

}  // namespace conemm

#endif  // CONEMM_MINIMAX_HPP
