#include "cayley/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "cayley/checks.hpp"
#include "cayley/explorer.hpp"

namespace cayley {

namespace {

using nlohmann::json;

int vector_ell(int m) { return m % 2 == 1 ? m - 3 : m - 4; }

// Empty string when the check applies; otherwise the reason it is skipped.
std::string skip_reason(const std::string& id, int m, const RunConfig& cfg) {
  if (id == "aut-h-even" && m > 5) return "exhaustive enumeration limited to m <= 5";
  if (id == "cubic" && m > cfg.cubic_max_m) return "m above cubic_max_m";
  if (id == "ball-adjacency" && m > cfg.ball_max_m) return "m above ball_max_m";
  if (id == "vector-transitivity" && vector_ell(m) < 2) return "ell < 2";
  return {};
}

CheckResult run_check(const std::string& id, const Construction& c, const RunConfig& cfg) {
  if (id == "involutions") return verify_involutions(c);
  if (id == "alt-containment") return verify_alt_containment(c);
  if (id == "aut-h-even") return verify_aut_h_alternating(c.m);
  if (id == "arrow-chains") return verify_arrow_chains(c);
  if (id == "xyz8-cycles") return verify_xyz8_cycles(c);
  if (id == "transitive-hstar") return verify_transitive_hstar(c);
  if (id == "word-witnesses") return verify_word_witnesses(c);
  if (id == "full-alternating") {
    AltOptions o;
    o.degree_cap = cfg.bsgs_degree_cap;
    o.seed = cfg.seed;
    o.budget = cfg.jordan_budget;
    return verify_full_alternating(c, o);
  }
  if (id == "cubic") return verify_cubic(c, cfg.closure_cap);
  if (id == "fix-patterns") return verify_fix_patterns(c);
  if (id == "vector-transitivity") {
    CheckResult r = verify_vector_transitivity(vector_ell(c.m));
    r.m = c.m;
    return r;
  }
  if (id == "ball-adjacency") return verify_ball(c, cfg.ball_radius, cfg.ball_max_vertices);
  throw std::invalid_argument("unknown check id: " + id);
}

json config_json(const RunConfig& c) {
  return {{"ms", c.ms},
          {"lemmas", c.lemmas.empty() ? json("all") : json(c.lemmas)},
          {"seed", c.seed},
          {"bsgs_degree_cap", c.bsgs_degree_cap},
          {"closure_cap", c.closure_cap},
          {"jordan_budget", c.jordan_budget},
          {"cubic_max_m", c.cubic_max_m},
          {"ball_max_m", c.ball_max_m},
          {"ball_radius", c.ball_radius},
          {"ball_max_vertices", c.ball_max_vertices}};
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids{
      "involutions",  "alt-containment",  "aut-h-even",       "arrow-chains",
      "xyz8-cycles",  "transitive-hstar", "word-witnesses",   "full-alternating",
      "cubic",        "fix-patterns",     "vector-transitivity", "ball-adjacency"};
  return ids;
}

void validate(const RunConfig& config) {
  for (int m : config.ms)
    if (m < kMinM || m > kMaxM)
      throw std::invalid_argument("m must lie in [" + std::to_string(kMinM) + ", " + std::to_string(kMaxM) +
                                  "], got " + std::to_string(m));
  const auto& ids = all_check_ids();
  for (const auto& id : config.lemmas)
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw std::invalid_argument("unknown check id: " + id);
  if (config.bsgs_degree_cap == 0 || config.closure_cap == 0 || config.jordan_budget == 0 ||
      config.ball_max_vertices == 0)
    throw std::invalid_argument("caps must be positive");
}

std::vector<int> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("expected A..B, got " + text);
  std::size_t used_a = 0, used_b = 0;
  int a = 0, b = 0;
  try {
    a = std::stoi(text.substr(0, dots), &used_a);
    b = std::stoi(text.substr(dots + 2), &used_b);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected A..B, got " + text);
  }
  if (used_a != dots || used_b != text.size() - dots - 2)
    throw std::invalid_argument("expected A..B, got " + text);
  std::vector<int> out;
  for (int m = a; m <= b; ++m) out.push_back(m);
  return out;
}

Certificate run_all(const RunConfig& config, const ConstructionFactory& factory) {
  validate(config);
  Certificate cert;
  cert.config = config;
  cert.generated_at = utc_now();
  std::vector<int> ms = config.ms;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  const std::vector<std::string>& ids = config.lemmas.empty() ? all_check_ids() : config.lemmas;

  for (int m : ms) {
    InstanceResult inst;
    inst.m = m;
    const Construction c = factory(m);
    for (const auto& id : all_check_ids()) {
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
      if (const std::string why = skip_reason(id, m, config); !why.empty()) {
        inst.skipped.emplace_back(id, why);
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = run_check(id, c, config);
      } catch (const std::exception& e) {
        r = CheckResult{id, "", CheckStatus::fail, m, {{"error", e.what()}}};
      }
      const auto stop = std::chrono::steady_clock::now();
      if (r.status == CheckStatus::fail) cert.status = CheckStatus::fail;
      inst.checks.push_back(std::move(r));
      inst.timings_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    cert.instances.push_back(std::move(inst));
  }
  return cert;
}

json to_json(const Certificate& cert) {
  json instances = json::array();
  json timings = json::object();
  for (const auto& inst : cert.instances) {
    json checks = json::array();
    for (std::size_t i = 0; i < inst.checks.size(); ++i) {
      checks.push_back(to_json(inst.checks[i]));
      timings["m=" + std::to_string(inst.m) + "/" + inst.checks[i].id] =
          std::round(inst.timings_ms[i] * 1000.0) / 1000.0;
    }
    json skipped = json::array();
    for (const auto& [id, why] : inst.skipped) skipped.push_back({{"id", id}, {"reason", why}});
    instances.push_back({{"m", inst.m}, {"checks", checks}, {"skipped", skipped}});
  }
  json failing = json::array();
  for (const auto& [m, id] : failing_checks(cert)) failing.push_back({{"m", m}, {"id", id}});
  return {{"schema_version", kCertificateSchemaVersion},
          {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"config", config_json(cert.config)},
          {"instances", instances},
          {"status", to_string(cert.status)},
          {"failing", failing},
          {"timings_ms", timings},
          {"generated_at", cert.generated_at}};
}

std::string canonical_json(const Certificate& cert) {
  json j = to_json(cert);
  j.erase("timings_ms");
  j.erase("generated_at");
  return j.dump(2) + "\n";
}

std::string to_text(const Certificate& cert) {
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << "  seed " << cert.config.seed << "\n";
  os << std::left << std::setw(4) << "m" << std::setw(22) << "check" << std::setw(8) << "status"
     << "anchor\n";
  for (const auto& inst : cert.instances) {
    for (const auto& r : inst.checks)
      os << std::setw(4) << inst.m << std::setw(22) << r.id << std::setw(8) << to_string(r.status) << r.anchor
         << "\n";
    for (const auto& [id, why] : inst.skipped)
      os << std::setw(4) << inst.m << std::setw(22) << id << std::setw(8) << "skip" << why << "\n";
  }
  os << "overall: " << to_string(cert.status) << "\n";
  return os.str();
}

std::vector<std::pair<int, std::string>> failing_checks(const Certificate& cert) {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& inst : cert.instances)
    for (const auto& r : inst.checks)
      if (r.status == CheckStatus::fail) out.emplace_back(inst.m, r.id);
  return out;
}

}  // namespace cayley
