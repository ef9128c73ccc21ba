#pragma once

#include <string>
#include <vector>

namespace qcover {

enum class CheckStatus { pass, fail, flagged_discrepancy };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged_discrepancy: return "flagged-discrepancy";
  }
  return "?";
}

/// One verified item: a table row, an example or an identity.
struct CheckItem {
  std::string id;
  CheckStatus status = CheckStatus::fail;
  std::string detail;

  bool passed() const { return status != CheckStatus::fail; }
};

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

/// True when no item failed; flagged discrepancies do not count as failures.
inline bool all_passed(const std::vector<CheckItem>& items) {
  for (const auto& i : items)
    if (!i.passed()) return false;
  return true;
}

}  // namespace qcover
