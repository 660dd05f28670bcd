#ifndef CAYLEY_CHECK_RESULT_HPP
#define CAYLEY_CHECK_RESULT_HPP

#include <string>

#include "json.hpp"

namespace cayley {

/// pass/fail cover asserted conditions; report marks quantities that are
/// computed and recorded but deliberately not asserted.
enum class CheckStatus { pass, fail, report };

std::string to_string(CheckStatus s);
/// Throws std::invalid_argument on an unknown name.
CheckStatus parse_status(const std::string& s);

struct CheckResult {
  std::string id;
  /// The mathematical statement being checked.
  std::string anchor;
  CheckStatus status = CheckStatus::report;
  int m = 0;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const CheckResult& r);
CheckResult check_result_from_json(const nlohmann::json& j);

inline CheckStatus pass_if(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

}  // namespace cayley

#endif  // CAYLEY_CHECK_RESULT_HPP
