// Plain-text pipeline reports with stable ordering and no timestamps, so two
// runs on identical inputs are byte-identical and diffs are meaningful.
#ifndef KNOTCERT_REPORT_HPP
#define KNOTCERT_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

namespace knotcert {

enum class CheckStatus { pass, fail, inconclusive, skipped };

inline std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::inconclusive: return "INCONCLUSIVE";
    default: return "SKIPPED";
  }
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

struct ReportSection {
  std::string name;
  bool skipped = false;
  std::vector<CheckResult> checks;
  std::vector<std::string> lines;  // CERT / UNITS / ALEX / INTEGRALITY etc.

  void check(const std::string& n, bool ok, const std::string& detail = "") {
    checks.push_back({n, ok ? CheckStatus::pass : CheckStatus::fail, detail});
  }
  void result(const std::string& n, CheckStatus s,
              const std::string& detail = "") {
    checks.push_back({n, s, detail});
  }
};

struct PipelineReport {
  std::vector<ReportSection> sections;

  // 0 = everything passed, 1 = a check failed, 2 = inconclusive results
  // present (and nothing failed).
  int exit_status() const {
    bool incl = false;
    for (const auto& s : sections) {
      for (const auto& c : s.checks) {
        if (c.status == CheckStatus::fail) return 1;
        if (c.status == CheckStatus::inconclusive) incl = true;
      }
    }
    return incl ? 2 : 0;
  }

  std::string text() const {
    std::ostringstream os;
    for (const auto& s : sections) {
      os << "== " << s.name << " ==\n";
      if (s.skipped) {
        os << "SKIPPED\n";
        continue;
      }
      for (const auto& line : s.lines) os << line << "\n";
      for (const auto& c : s.checks) {
        os << status_str(c.status) << " " << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
      }
    }
    int st = exit_status();
    os << "== summary ==\n";
    os << "status " << st << " ("
       << (st == 0 ? "all checks passed"
                   : (st == 1 ? "failures present"
                              : "inconclusive results present"))
       << ")\n";
    return os.str();
  }
};

}  // namespace knotcert

#endif  // KNOTCERT_REPORT_HPP
