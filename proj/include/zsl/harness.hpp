#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "zsl/constructive.hpp"
#include "zsl/davenport.hpp"
#include "zsl/graded_ring.hpp"
#include "zsl/group.hpp"
#include "zsl/invariants.hpp"

namespace zsl {

inline constexpr int kSchemaVersion = 1;

using GroupSpec = std::variant<AbelianGroup, SemidirectGroup>;

/// "Z6", "Z2xZ6" (normalized to invariant factors), "SD(3,2,2)".
GroupSpec parse_groupspec(std::string_view text);
/// As parse_groupspec but rejects semidirect groups.
AbelianGroup parse_abelian(std::string_view text);
SemidirectGroup parse_semidirect(std::string_view text);
std::string groupspec_string(const GroupSpec& g);

/// "reg(<abelian groupspec>)" or "ind(SD(p,d,e))".
MonomialRep parse_repspec(std::string_view text, const SearchLimits& limits = {});

/// Comma-separated non-negative integers, e.g. "1,3".
std::vector<std::int64_t> parse_int_list(std::string_view text);

nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const Sequence& s);
nlohmann::json to_json(const DavenportReport& r);
nlohmann::json to_json(const LinearityProfile& p);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const SupportLemmaResult& r);
nlohmann::json to_json(const ProductBoundReport& r);
nlohmann::json to_json(const BetaReport& r);
nlohmann::json to_json(const CrossCheckReport& r);
nlohmann::json to_json(const SigmaZpZdReport& r);
nlohmann::json to_json(const SigmaAz2Report& r);
nlohmann::json to_json(const PresentedBetaReport& r);

/// Wraps a payload with schema_version and the command name.
nlohmann::json envelope(std::string_view command, nlohmann::json payload);

/// CSV with columns k,D_k,d_k,witness.
std::string dk_table_csv(const std::vector<DavenportReport>& rows);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view status_name(CheckStatus s);

struct CheckResult {
  int id = 0;
  std::string name;
  std::string title;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  nlohmann::json evidence = nlohmann::json::object();
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::Pass) == static_cast<int>(checks.size()); }
  bool any_failed() const { return count(CheckStatus::Fail) > 0; }

  // Timings live under a separate top-level "timings" key so that two runs
  // can be compared byte for byte after dropping it.
  nlohmann::json to_json(bool include_timings = true) const;
};

struct VerifyConfig {
  double budget_seconds = 600.0;
  // Group specs (as printed, e.g. "Z2", "Z2xZ2", "SD(3,2,2)") allowed to
  // appear in checks; empty means all. Checks left with no instances are
  // skipped.
  std::vector<std::string> groups;
  // Name of a check whose golden table is shifted by one (negative control).
  std::string inject_fault;
  std::uint64_t seed = 20240601;
};

/// Names of the checks in run order.
std::vector<std::string> check_names();

SuiteReport verify_all(const VerifyConfig& config);

}  // namespace zsl
