// One line per criterion. Values are compared exactly; the second column is
// the wall-clock ceiling for that check.
#include <cstdio>
#include <string>
#include <vector>

#include "zsl/harness.hpp"

namespace {

struct Pin {
  const char* name;
  double max_seconds;
};

// In check order.
const std::vector<Pin> kPins = {
    {"davenport-baselines", 30},    {"generalized-constants", 120}, {"eventual-linearity", 120},
    {"inequality-suite", 120},      {"product-bound", 120},         {"support-lemma", 60},
    {"beta-davenport-crosscheck", 180}, {"example-ring", 60},       {"sigma-zpzd", 120},
    {"sigma-az2", 120},             {"order-bound", 60},            {"subquotient", 120},
    {"engine-vs-oracle", 120},
};

}  // namespace

int main() {
  zsl::VerifyConfig config;
  const auto report = zsl::verify_all(config);
  int failed = 0;
  double total = 0;
  if (report.checks.size() != kPins.size()) {
    std::printf("criterion count mismatch: %zu checks, %zu pins\n", report.checks.size(), kPins.size());
    return 1;
  }
  for (std::size_t i = 0; i < kPins.size(); ++i) {
    const auto& c = report.checks[i];
    total += c.seconds;
    bool ok = c.name == kPins[i].name && c.status == zsl::CheckStatus::Pass &&
              c.seconds <= kPins[i].max_seconds;
    std::string why;
    if (c.name != kPins[i].name) why = "expected " + std::string(kPins[i].name);
    else if (c.status != zsl::CheckStatus::Pass) why = std::string(zsl::status_name(c.status)) + ": " + c.detail;
    else if (!ok) why = "over time limit";
    std::printf("criterion %2d: %s  %-26s %7.2fs (limit %4.0fs)%s%s\n", c.id, ok ? "PASS" : "FAIL",
                c.name.c_str(), c.seconds, kPins[i].max_seconds, why.empty() ? "" : "  ", why.c_str());
    if (!ok) ++failed;
  }
  const bool total_ok = total <= 600;
  std::printf("total: %.2fs (limit 600s) %s\n", total, total_ok ? "PASS" : "FAIL");
  std::printf("%d/%zu criteria passed\n", static_cast<int>(kPins.size()) - failed, kPins.size());
  return failed == 0 && total_ok ? 0 : 1;
}
