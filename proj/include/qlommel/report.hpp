#ifndef QLOMMEL_REPORT_HPP
#define QLOMMEL_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlommel {

// Per-case outcome of an identity/conjecture verifier. `flagged` is reserved
// for open-question variants where a non-printed form matched; the report
// records which one, it never silently corrects.
struct CaseResult {
  std::string label;
  std::string status;  // "pass" | "fail" | "flagged"
  std::string note;
};

struct Report {
  std::string id;
  std::map<std::string, std::string> params;
  std::vector<CaseResult> cases;
  std::optional<int> first_failure_order;
  std::string witness;
  double timing_ms = 0.0;  // kept out of serialized payloads

  void add_pass(const std::string& label, const std::string& note = "") {
    cases.push_back({label, "pass", note});
  }
  void add_fail(const std::string& label, const std::string& note = "", std::optional<int> order = std::nullopt) {
    cases.push_back({label, "fail", note});
    if (order && !first_failure_order) first_failure_order = order;
    if (witness.empty()) witness = note.empty() ? label : note;
  }
  void add_flagged(const std::string& label, const std::string& note = "") {
    cases.push_back({label, "flagged", note});
  }
  void check(bool ok, const std::string& label, const std::string& note = "",
             std::optional<int> order = std::nullopt) {
    if (ok)
      add_pass(label);
    else
      add_fail(label, note, order);
  }

  std::string status() const {
    bool flagged = false;
    for (const auto& c : cases) {
      if (c.status == "fail") return "fail";
      if (c.status == "flagged") flagged = true;
    }
    return flagged ? "flagged" : "pass";
  }
  bool passed() const { return status() != "fail"; }
};

}  // namespace qlommel

#endif
