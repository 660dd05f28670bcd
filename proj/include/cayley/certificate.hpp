#ifndef CAYLEY_CERTIFICATE_HPP
#define CAYLEY_CERTIFICATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cayley/check_result.hpp"
#include "cayley/construction.hpp"

namespace cayley {

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr const char* kToolName = "cayleycert";
inline constexpr const char* kToolVersion = "1.0.0";

/// Check ids in run order.
const std::vector<std::string>& all_check_ids();

struct RunConfig {
  std::vector<int> ms;
  /// Empty selects every check.
  std::vector<std::string> lemmas;
  std::uint64_t seed = 1;
  std::size_t bsgs_degree_cap = 256;
  std::size_t closure_cap = std::size_t{1} << 20;
  std::uint64_t jordan_budget = 100000;
  /// The double coset check stores 3 * 2^m tables of 2^m points each.
  int cubic_max_m = 12;
  int ball_max_m = 6;
  std::size_t ball_radius = 4;
  std::size_t ball_max_vertices = 200000;
};

/// Throws std::invalid_argument on m outside [kMinM, kMaxM], unknown check
/// ids or non-positive caps.
void validate(const RunConfig& config);

/// Parses "A..B" (inclusive). Throws std::invalid_argument.
std::vector<int> parse_m_range(const std::string& text);

struct InstanceResult {
  int m = 0;
  std::vector<CheckResult> checks;
  std::vector<double> timings_ms;  // parallel to checks
  /// Checks not applicable or outside the configured caps, with reasons.
  std::vector<std::pair<std::string, std::string>> skipped;
};

struct Certificate {
  RunConfig config;
  std::vector<InstanceResult> instances;
  CheckStatus status = CheckStatus::pass;
  std::string generated_at;
};

using ConstructionFactory = std::function<Construction(int)>;

/// Runs every selected check that applies to each m. Failures, including
/// exceptions thrown by a check, are recorded as data.
Certificate run_all(const RunConfig& config, const ConstructionFactory& factory = build_construction);

/// Full JSON including timings and the timestamp.
nlohmann::json to_json(const Certificate& cert);
/// Sorted keys, timings and timestamp removed, two-space indentation.
std::string canonical_json(const Certificate& cert);
/// One row per check: m, id, status, anchor.
std::string to_text(const Certificate& cert);

/// (m, id) of every failed check.
std::vector<std::pair<int, std::string>> failing_checks(const Certificate& cert);

}  // namespace cayley

#endif  // CAYLEY_CERTIFICATE_HPP
