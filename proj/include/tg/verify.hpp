#pragma once

// Runtime self-checks, grouped by module.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tg/audit.hpp"

namespace tg {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  AuditReport audit;  // filled by the states suite
  bool passed() const;
};

// scalars, grassmann, oscillator, states, bargmann, susy or all.
const std::vector<std::string>& suite_names();

// Throws Error for an unknown suite.
VerifyReport verify(std::string_view suite);

nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace tg
