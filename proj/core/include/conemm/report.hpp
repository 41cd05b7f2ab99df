#ifndef CONEMM_REPORT_HPP
#define CONEMM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conemm/checks.hpp"
#include "conemm/theorem_suite.hpp"

namespace conemm {

inline constexpr const char* kToolVersion = "0.3.0";

/// Evenly spaced targets in [0, 1]^dim, @p per_axis points per axis.
std::vector<Vec> unit_z_grid(int dim, int per_axis);

struct ReportEntry {
  enum class Kind { property, theorem };
  Kind kind = Kind::property;
  std::string id;
  std::string fixture;
  std::string cone;
  /// Status string for properties, overall string for theorems.
  std::string status;
  bool failed = false;
  std::optional<std::string> expected;
  nlohmann::json detail;
  std::optional<double> wall_ms;

  bool matches_expected() const { return !expected || *expected == status; }
};

class RunReport {
 public:
  explicit RunReport(ToleranceConfig cfg, bool timing = false);

  void add_verdict(const Verdict& v, std::optional<bool> replayed, double wall_ms,
                   std::optional<std::string> expected = std::nullopt);
  void add_suite(const SuiteResult& s, double wall_ms,
                 std::optional<std::string> expected = std::nullopt);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  /// "pass" when every entry matches its expectation (or holds, if none).
  std::string overall() const;
  int exit_code() const { return overall() == "pass" ? 0 : 1; }

  nlohmann::json to_json() const;
  std::string to_markdown() const;
  /// JSON (indent 2) or markdown, newline-terminated.
  std::string render(const std::string& format) const;

 private:
  bool entry_ok(const ReportEntry& e) const;

  ToleranceConfig cfg_;
  bool timing_;
  std::vector<ReportEntry> entries_;
};

/// One line of the worked-example regression matrix.
struct MatrixEntry {
  ReportEntry::Kind kind = ReportEntry::Kind::property;
  std::string fixture;
  std::string cone;
  std::string id;  ///< property id or theorem id
  /// Per-axis size of the weakly_z target grid; 0 keeps the default targets.
  int z_grid = 0;
  std::string expected;
};

std::vector<MatrixEntry> example_matrix();

/// Runs every matrix entry at @p cfg; fixtures are rebuilt at cfg's resolution.
RunReport run_matrix(const std::vector<MatrixEntry>& matrix, const ToleranceConfig& cfg,
                     bool timing = false);

}  // namespace conemm

#endif  // CONEMM_REPORT_HPP
