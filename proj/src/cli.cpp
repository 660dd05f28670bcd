#include "cayley/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cayley/certificate.hpp"
#include "cayley/explorer.hpp"

namespace cayley {

namespace {

struct VerifyArgs {
  int m = 0;
  std::string m_range;
  std::string lemmas = "all";
  std::uint64_t seed = 1;
  std::string out;
  std::string format;
  RunConfig config;
};

struct BallArgs {
  int m = 4;
  std::size_t radius = 2;
  std::string format;
  std::size_t max_vertices = 2000000;
  std::string out;
};

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) ids.push_back(tok);
  return ids;
}

void check_m(int m) {
  if (m < kMinM || m > kMaxM)
    throw std::invalid_argument("m must lie in [" + std::to_string(kMinM) + ", " + std::to_string(kMaxM) +
                                "], got " + std::to_string(m));
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int cmd_verify(VerifyArgs& a, std::ostream& out, std::ostream& err) {
  RunConfig cfg = a.config;
  cfg.seed = a.seed;
  if (a.m != 0 && !a.m_range.empty()) throw std::invalid_argument("give either --m or --m-range");
  if (a.m != 0) cfg.ms = {a.m};
  else if (!a.m_range.empty()) cfg.ms = parse_m_range(a.m_range);
  else throw std::invalid_argument("one of --m or --m-range is required");
  for (int m : cfg.ms) check_m(m);
  if (a.lemmas != "all") cfg.lemmas = split_ids(a.lemmas);
  std::string format = a.format.empty() ? (a.out.empty() ? "text" : "json") : a.format;
  validate(cfg);

  const Certificate cert = run_all(cfg);
  const std::string body = format == "json" ? to_json(cert).dump(2) + "\n" : to_text(cert);
  if (a.out.empty()) {
    out << body;
  } else {
    if (!write_file(a.out, body, err)) return kExitUsage;
    out << "certificate written to " << a.out << ", status " << to_string(cert.status) << "\n";
  }
  for (const auto& [m, id] : failing_checks(cert)) err << "FAIL m=" << m << " " << id << "\n";
  return cert.status == CheckStatus::fail ? kExitFailure : kExitPass;
}

int cmd_ball(const BallArgs& a, std::ostream& out, std::ostream& err) {
  check_m(a.m);
  if (a.max_vertices == 0) throw std::invalid_argument("--max-vertices must be positive");
  const CayleyBall ball = bfs_ball(a.m, a.radius, a.max_vertices);
  const GirthReport girth = girth_report(ball);

  std::ostringstream summary;
  summary << "m " << ball.m << "  radius " << ball.radius << "  vertices " << ball.vertices.size() << "  edges "
          << ball.edges.size() << (ball.truncated ? "  truncated" : "") << "\n";
  summary << "frontier sizes:";
  for (std::size_t f : ball.frontier_sizes) summary << " " << f;
  summary << "\n";
  if (girth.girth)
    summary << "girth " << *girth.girth << (girth.cycle_revalidated ? " (cycle re-validated)" : "") << "\n";
  else
    summary << "girth >= " << girth.lower_bound << " (no cycle through the root in the ball)\n";

  if (a.format.empty()) {
    out << summary.str();
    return kExitPass;
  }
  const std::string body = export_ball(ball, parse_export_format(a.format));
  if (a.out.empty()) {
    out << body;
    err << summary.str();
  } else {
    if (!write_file(a.out, body, err)) return kExitUsage;
    out << summary.str();
  }
  return kExitPass;
}

int cmd_construct(int m, std::ostream& out) {
  check_m(m);
  const Construction c = build_construction(m);
  const HParams p(m);
  out << "m = " << m << ", |H| = " << p.order() << ", H = D8 x Z2^" << p.c_count() << "\n";
  out << "h = " << element_h(m).to_string() << "\n";
  if (m % 2 == 0) out << "h1 = " << element_h1(m).to_string() << "\n";
  const std::pair<const char*, const Permutation*> gens[] = {{"x", &c.x}, {"y", &c.y}, {"z", &c.z}};
  for (const auto& [name, g] : gens) {
    out << name << ": " << (parity(*g) == Parity::even ? "even" : "odd") << ", "
        << (compose(*g, *g).is_identity() && !g->is_identity() ? "involution" : "not an involution") << ", "
        << fixed_points(*g).size() << " fixed points\n";
    out << "  " << cycle_string(cycle_decomposition(*g)) << "\n";
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construction, verification and exploration of the cubic Cayley graphs on Alt(2^m - 1)",
               "cayleycert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the checks and write a certificate");
  verify->add_option("--m", va.m, "instance parameter");
  verify->add_option("--m-range", va.m_range, "inclusive range A..B");
  verify->add_option("--lemmas", va.lemmas, "all, or a comma-separated list of check ids");
  verify->add_option("--seed", va.seed, "seed for randomized certificates")->capture_default_str();
  verify->add_option("--out", va.out, "certificate path (stdout when omitted)");
  verify->add_option("--format", va.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--bsgs-degree-cap", va.config.bsgs_degree_cap, "largest degree for stabilizer chains")
      ->capture_default_str();
  verify->add_option("--closure-cap", va.config.closure_cap, "largest double coset closure")
      ->capture_default_str();
  verify->add_option("--budget", va.config.jordan_budget, "random words tried by the Jordan certificate")
      ->capture_default_str();
  verify->add_option("--cubic-max-m", va.config.cubic_max_m, "largest m for the double coset check")
      ->capture_default_str();
  verify->add_option("--ball-max-m", va.config.ball_max_m, "largest m for the ball check")->capture_default_str();
  verify->add_option("--ball-radius", va.config.ball_radius, "radius of the checked ball")->capture_default_str();
  verify->add_option("--ball-max-vertices", va.config.ball_max_vertices, "vertex cap of the checked ball")
      ->capture_default_str();

  BallArgs ba;
  auto* ball = app.add_subcommand("ball", "explore a ball of the Cayley graph");
  ball->add_option("--m", ba.m, "instance parameter")->required();
  ball->add_option("--radius", ba.radius, "ball radius")->capture_default_str();
  ball->add_option("--export", ba.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  ball->add_option("--max-vertices", ba.max_vertices, "vertex cap")->capture_default_str();
  ball->add_option("--out", ba.out, "export path (stdout when omitted)");

  int cm = 0;
  auto* construct = app.add_subcommand("construct", "print x, y, z and key elements");
  construct->add_option("--m", cm, "instance parameter")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va, out, err);
    if (*ball) return cmd_ball(ba, out, err);
    return cmd_construct(cm, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cayley
