#include "vword/report.hpp"

#include <algorithm>
#include <sstream>

namespace vword {

void Report::add(std::string name, bool passed, std::string details) {
  checks_.push_back(CheckResult{std::move(name), passed, std::move(details)});
}

bool Report::all_passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.details.empty()) {
      out << "  (" << c.details << ")";
    }
    out << "\n";
  }
  out << (all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["details"] = c.details;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = all_passed();
  return j;
}

}  // namespace vword
