#include "cayley/check_result.hpp"

#include <stdexcept>

namespace cayley {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::report:
      return "report";
  }
  return "report";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "report") return CheckStatus::report;
  throw std::invalid_argument("unknown check status: " + s);
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"id", r.id},
          {"anchor", r.anchor},
          {"status", to_string(r.status)},
          {"m", r.m},
          {"details", r.details}};
}

CheckResult check_result_from_json(const nlohmann::json& j) {
  return {j.at("id").get<std::string>(), j.at("anchor").get<std::string>(),
          parse_status(j.at("status").get<std::string>()), j.at("m").get<int>(), j.at("details")};
}

}  // namespace cayley
