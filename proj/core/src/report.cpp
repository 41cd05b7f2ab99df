#include "conemm/report.hpp"

#include <chrono>
#include <sstream>

#include "conemm/config.hpp"
#include "conemm/fixture_library.hpp"

namespace conemm {
namespace {

std::string kind_name(ReportEntry::Kind k) {
  return k == ReportEntry::Kind::property ? "property" : "theorem";
}

std::string cell(const nlohmann::json& j) {
  if (j.is_null()) return "";
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  for (char& c : s)
    if (c == '|') c = '/';
  return s;
}

}  // namespace

std::vector<Vec> unit_z_grid(int dim, int per_axis) {
  if (dim < 1 || per_axis < 1) throw InvalidInput("z grid needs dim >= 1 and points >= 1");
  std::vector<Vec> out;
  std::vector<int> idx(dim, 0);
  while (true) {
    Vec z(dim);
    for (int a = 0; a < dim; ++a)
      z[a] = per_axis == 1 ? 0.0 : static_cast<double>(idx[a]) / (per_axis - 1);
    out.push_back(std::move(z));
    int a = dim - 1;
    while (a >= 0 && ++idx[a] == per_axis) idx[a--] = 0;
    if (a < 0) break;
  }
  return out;
}

RunReport::RunReport(ToleranceConfig cfg, bool timing) : cfg_(cfg), timing_(timing) {}

void RunReport::add_verdict(const Verdict& v, std::optional<bool> replayed, double wall_ms,
                            std::optional<std::string> expected) {
  ReportEntry e;
  e.kind = ReportEntry::Kind::property;
  e.id = v.property.id();
  e.fixture = v.fixture;
  e.cone = v.cone;
  e.status = to_string(v.status);
  e.failed = is_failure(v.status);
  e.expected = std::move(expected);
  e.detail = v.to_json();
  for (const char* k : {"fixture", "cone", "property", "status", "tolerances"})
    e.detail.erase(k);
  if (replayed) e.detail["replayed"] = *replayed;
  if (timing_) e.wall_ms = wall_ms;
  entries_.push_back(std::move(e));
}

void RunReport::add_suite(const SuiteResult& s, double wall_ms,
                          std::optional<std::string> expected) {
  ReportEntry e;
  e.kind = ReportEntry::Kind::theorem;
  e.id = s.theorem;
  e.fixture = s.fixture;
  e.cone = s.cone;
  e.status = s.overall();
  e.failed = !s.consistent();
  e.expected = std::move(expected);
  e.detail = s.to_json();
  for (const char* k : {"theorem", "fixture", "cone", "overall"}) e.detail.erase(k);
  if (timing_) e.wall_ms = wall_ms;
  entries_.push_back(std::move(e));
}

bool RunReport::entry_ok(const ReportEntry& e) const {
  return e.expected ? e.matches_expected() : !e.failed;
}

std::string RunReport::overall() const {
  for (const auto& e : entries_)
    if (!entry_ok(e)) return "fail";
  return "pass";
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  std::string fixture, cone;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (i == 0) {
      fixture = e.fixture;
      cone = e.cone;
    }
    if (e.fixture != fixture) fixture = "multiple";
    if (e.cone != cone) cone = "multiple";
    nlohmann::json c = {{"kind", kind_name(e.kind)},
                        {"id", e.id},
                        {"fixture", e.fixture},
                        {"cone", e.cone},
                        {"status", e.status}};
    if (e.expected) {
      c["expected"] = *e.expected;
      c["matches_expected"] = e.matches_expected();
    }
    c["detail"] = e.detail;
    if (e.wall_ms) c["wall_ms"] = *e.wall_ms;
    checks.push_back(std::move(c));
  }
  return {{"version", kToolVersion},
          {"fixture", fixture},
          {"cone", cone},
          {"config", cfg_.to_json()},
          {"checks", checks},
          {"overall", overall()}};
}

std::string RunReport::to_markdown() const {
  const nlohmann::json j = to_json();
  std::ostringstream os;
  os << "# conemm report\n\n";
  os << "- version: " << kToolVersion << "\n";
  os << "- fixture: " << cell(j["fixture"]) << "\n";
  os << "- cone: " << cell(j["cone"]) << "\n";
  os << "- config: `" << cfg_.to_json().dump() << "`\n";
  os << "- overall: **" << overall() << "**\n\n";
  os << "| kind | id | fixture | status | expected | witness |";
  if (timing_) os << " wall ms |";
  os << "\n|---|---|---|---|---|---|";
  if (timing_) os << "---|";
  os << "\n";
  for (const auto& e : entries_) {
    nlohmann::json w;
    if (e.kind == ReportEntry::Kind::property)
      w = e.detail.value("witness", nlohmann::json());
    else
      w = e.detail["certificate"].value("z1", nlohmann::json());
    os << "| " << kind_name(e.kind) << " | " << e.id << " | " << e.fixture << " | "
       << e.status << " | " << (e.expected ? *e.expected : "") << " | " << cell(w) << " |";
    if (timing_) os << ' ' << (e.wall_ms ? std::to_string(*e.wall_ms) : "") << " |";
    os << "\n";
  }
  return os.str();
}

std::string RunReport::render(const std::string& format) const {
  if (format == "json") return to_json().dump(2) + "\n";
  if (format == "markdown") return to_markdown();
  throw InvalidInput("unknown report format '" + format + "'");
}

std::vector<MatrixEntry> example_matrix() {
  using K = ReportEntry::Kind;
  return {
      {K::property, "ex2_1", "Rplus", "wcg[first,convex]", 0, "Refuted"},
      {K::property, "ex2_1", "Rplus", "wnq[first,convex]", 0, "Confirmed"},
      {K::property, "ex3_1", "Rplus", "transfer_mu_v[first,convex]", 0, "NotRefuted"},
      {K::property, "ex3_1", "Rplus", "alpha[first,convex]", 0, "Confirmed"},
      {K::property, "ex3_2", "R2plus", "pair_properly_v[first,convex]", 0, "Refuted"},
      {K::property, "ex3_2", "R2plus", "alpha[first,convex]", 0, "NotConfirmed"},
      {K::property, "ex3_4", "Rplus", "transfer_mu_scalar[first,convex]", 0, "NotRefuted"},
      {K::property, "ex3_5", "Rplus", "pair_properly_iii[second,concave]", 0, "NotRefuted"},
      {K::property, "ex3_6", "R2plus", "transfer_mu_v[first,convex]", 0, "Refuted"},
      {K::property, "ex3_6", "R2plus", "pair_properly_v[first,convex]", 0, "NotRefuted"},
      {K::property, "ex3_7", "Rplus", "transfer_properly_iii[first,concave]", 0, "NotRefuted"},
      {K::property, "ex3_7", "Rplus", "naturally_qc_iii[first,concave]", 0, "NotRefuted"},
      {K::property, "ex3_8", "Rplus", "gamma[first,convex]", 0, "Confirmed"},
      {K::property, "rem4_2", "Rplus", "transfer_properly_iii[first,concave]", 0, "Refuted"},
      {K::property, "rem4_2", "Rplus", "gamma[first,convex]", 0, "Confirmed"},
      {K::property, "ex4_1", "minusR2plus", "alpha[first,convex]", 0, "Confirmed"},
      {K::property, "ex4_1", "minusR2plus", "naturally_qc_iii[first,concave]", 0,
       "NotRefuted"},
      {K::property, "ex4_4", "Rplus", "weakly_z[first,convex]", 21, "Confirmed"},
      {K::property, "ex4_5", "R2plus", "weakly_z[first,convex]", 6, "Confirmed"},
      {K::theorem, "ex4_1", "minusR2plus", "thm42_i", 0, "consistent-with-theorem"},
      {K::theorem, "ex4_2", "Rplus", "thm41_i", 0, "consistent-with-theorem"},
      {K::theorem, "ex4_2", "Rplus", "cor41_i", 0, "consistent-with-theorem"},
      {K::theorem, "ex4_3", "Rplus", "thm41_i", 0, "consistent-with-theorem"},
      {K::theorem, "ex4_3", "Rplus", "cor43_i", 0, "consistent-with-theorem"},
      {K::theorem, "ex4_6", "Rplus", "thm45", 0, "consistent-with-theorem"},
      {K::theorem, "ex4_7", "R2plus", "cor44", 0, "consistent-with-theorem"},
  };
}

RunReport run_matrix(const std::vector<MatrixEntry>& matrix, const ToleranceConfig& cfg,
                     bool timing) {
  cfg.validate();
  RunReport report(cfg, timing);
  for (const auto& m : matrix) {
    const auto start = std::chrono::steady_clock::now();
    const SetValuedFixture fx = make_fixture(m.fixture, cfg.fixture_params());
    const Cone cone = parse_cone_spec(m.cone, cfg.eps_cone, cfg.eps_interior);
    CheckOptions opt;
    opt.cfg = cfg;
    if (m.z_grid > 0) opt.z_set = unit_z_grid(cone.dim(), m.z_grid);
    auto elapsed = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                       start)
          .count();
    };
    std::optional<std::string> expected;
    if (!m.expected.empty()) expected = m.expected;
    if (m.kind == ReportEntry::Kind::property) {
      const Verdict v = check_property(fx, cone, PropertySpec::parse(m.id), opt);
      std::optional<bool> replayed;
      if (v.status == Status::refuted || v.status == Status::confirmed)
        replayed = replay(v, fx, cone, opt);
      report.add_verdict(v, replayed, elapsed(), expected);
    } else {
      const SuiteResult s = run_theorem_suite(fx, cone, m.id, opt);
      report.add_suite(s, elapsed(), expected);
    }
  }
  return report;
}

}  // namespace conemm
