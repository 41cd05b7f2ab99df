#ifndef CONEMM_THEOREM_SUITE_HPP
#define CONEMM_THEOREM_SUITE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conemm/checks.hpp"
#include "conemm/minimax.hpp"

namespace conemm {

struct TheoremInfo {
  std::string id;
  Conclusion conclusion = Conclusion::pair_i;
  /// Property hypotheses, checked in order.
  std::vector<PropertySpec> hypotheses;
  /// Reported alongside but not required for consistency.
  std::vector<PropertySpec> supplementary;
  /// Inclusion theorems: the target set lies in F(x, X) - S for every x
  /// (in the mirror for the second form).
  bool row_condition = false;
  bool needs_simplex = false;
  bool real_valued = false;
  bool single_valued = false;
};

/// thm41_i ... cor45_ii, thm45, thm46 in listing order.
std::vector<std::string> theorem_ids();
/// Throws InvalidInput for unknown ids.
TheoremInfo theorem_info(const std::string& id);

struct HypothesisResult {
  std::string id;
  Status status = Status::not_refuted;
  bool required = true;
  /// Property verdict; absent for the row condition.
  std::optional<Verdict> verdict;
  /// Row condition evidence (failing x and uncovered point).
  Witness witness;
  /// Whether the witness of a Refuted/Confirmed verdict replays.
  std::optional<bool> replayed;

  nlohmann::json to_json() const;
};

struct SuiteResult {
  std::string theorem;
  std::string fixture;
  std::string cone;
  std::vector<HypothesisResult> hypotheses;
  MinimaxCertificate certificate;

  bool hypotheses_hold() const;
  bool consistent() const { return hypotheses_hold() && certificate.holds; }
  /// "consistent-with-theorem", "hypotheses-not-met" or "conclusion-missing".
  std::string overall() const;
  nlohmann::json to_json() const;
};

SuiteResult run_theorem_suite(const SetValuedFixture& fx, const Cone& cone,
                              const std::string& theorem_id, const CheckOptions& opt = {});

}  // namespace conemm

#endif  // CONEMM_THEOREM_SUITE_HPP
