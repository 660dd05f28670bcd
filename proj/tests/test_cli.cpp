#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cayley/cli.hpp"
#include "json.hpp"

using namespace cayley;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cayleycert_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, VerifyM5WritesPassingCertificate) {
  const std::string path = temp_path("cert5.json");
  const CliRun r = cli({"verify", "--m", "5", "--lemmas", "all", "--seed", "1", "--out", path});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  const auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["config"]["seed"], 1);
  for (const auto& c : j["instances"][0]["checks"]) EXPECT_EQ(c["status"], "pass") << c["id"];
  std::remove(path.c_str());
}

TEST(Cli, VerifyRejectsSmallM) {
  const CliRun r = cli({"verify", "--m", "3"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("m must lie"), std::string::npos);
}

TEST(Cli, VerifyRangeCoversFiveInstances) {
  const CliRun r = cli({"verify", "--m-range", "4..8", "--format", "json"});
  EXPECT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["instances"].size(), 5u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--m", "5", "--m-range", "4..6"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--m", "5", "--lemmas", "bogus"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--m", "5", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(cli({"ball", "--m", "4", "--export", "svg"}).code, kExitUsage);
  EXPECT_EQ(cli({"construct"}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitPass);
}

TEST(Cli, SameArgsSameCertificateModuloTimestamps) {
  const auto strip = [](const std::string& s) {
    auto j = nlohmann::json::parse(s);
    j.erase("timings_ms");
    j.erase("generated_at");
    return j.dump();
  };
  const CliRun a = cli({"verify", "--m", "9", "--format", "json", "--seed", "7"});
  const CliRun b = cli({"verify", "--m", "9", "--format", "json", "--seed", "7"});
  EXPECT_EQ(strip(a.out), strip(b.out));
}

TEST(Cli, VerifyTextFormat) {
  const CliRun r = cli({"verify", "--m", "6", "--lemmas", "involutions,cubic"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("involutions"), std::string::npos);
  EXPECT_NE(r.out.find("overall: pass"), std::string::npos);
}

TEST(Cli, BallJsonRadiusOne) {
  const CliRun r = cli({"ball", "--m", "4", "--radius", "1", "--export", "json"});
  EXPECT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 4u);
  EXPECT_EQ(j["edges"].size(), 3u);
  EXPECT_NE(r.err.find("frontier sizes: 1 3"), std::string::npos);
}

TEST(Cli, BallDotRadiusSix) {
  const std::string path = temp_path("ball.dot");
  const CliRun r = cli({"ball", "--m", "4", "--radius", "6", "--export", "dot", "--out", path});
  EXPECT_EQ(r.code, kExitPass);
  const std::string dot = slurp(path);
  EXPECT_EQ(dot.rfind("graph ", 0), 0u);
  EXPECT_NE(dot.find("v0:e"), std::string::npos);
  EXPECT_NE(r.out.find("girth 6"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, BallRadiusZero) {
  const CliRun r = cli({"ball", "--m", "4", "--radius", "0"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("vertices 1 "), std::string::npos);
}

TEST(Cli, BallTruncationIsNotAnError) {
  const CliRun r = cli({"ball", "--m", "5", "--radius", "8", "--max-vertices", "50"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("truncated"), std::string::npos);
}

TEST(Cli, Construct) {
  const CliRun r4 = cli({"construct", "--m", "4"});
  EXPECT_EQ(r4.code, kExitPass);
  EXPECT_NE(r4.out.find("z: even, involution"), std::string::npos);
  const CliRun r5 = cli({"construct", "--m", "5"});
  EXPECT_NE(r5.out.find("h = a c1\n"), std::string::npos);
  const CliRun r6 = cli({"construct", "--m", "6"});
  EXPECT_NE(r6.out.find("h1 = a c1\n"), std::string::npos);
}
