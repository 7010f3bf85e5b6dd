#ifndef VWORD_REPORT_HPP
#define VWORD_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vword {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;
};

/// Pass/fail table for a bundle of checks, printable as plain text or as
/// a machine-readable JSON summary.
class Report {
 public:
  void add(std::string name, bool passed, std::string details = "");

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  bool all_passed() const noexcept;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace vword

#endif  // VWORD_REPORT_HPP
