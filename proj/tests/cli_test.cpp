#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

#include "eulercf_tools/cli.hpp"
#include "eulercf_tools/scheme_file.hpp"

namespace eulercf::tools {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eulercf");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

TEST(Cli, ListShowsCatalog) {
  const Outcome r = cli({"list"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("brouncker_4_over_pi  III  α=1 β=1  atan_form\n"), std::string::npos);
  EXPECT_NE(r.out.find("euler_e  IV  α=1  exp_form\n"), std::string::npos);
}

TEST(Cli, ListFiltersAndEmitsJson) {
  const Outcome r = cli({"list", "--family", "family_VII", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  ASSERT_FALSE(doc.empty());
  for (const auto& row : doc) {
    EXPECT_EQ(row["family"], "VII");
    EXPECT_TRUE(row.contains("target_kind"));
    EXPECT_TRUE(row.contains("recipe"));
  }
  EXPECT_EQ(cli({"list", "--family", "VIII"}).code, kExitUsage);
}

TEST(Cli, EvalEulerTable) {
  const Outcome r = cli({"eval", "euler_e", "--depth", "4", "--euler-style"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::vector<std::string> l = lines(r.out);
  ASSERT_GE(l.size(), 6u);
  EXPECT_EQ(l[0], "level,p,q,value,abs_diff");
  EXPECT_EQ(l[1], "0,2,1,\"2,0000\",");
  EXPECT_EQ(l[2], "1,3,1,\"3,0000\",1");
  EXPECT_EQ(l[3].substr(0, 15), "2,8,3,\"2,6666\",");
  EXPECT_EQ(l[4].substr(0, 17), "3,30,11,\"2,7272\",");
  EXPECT_EQ(l[5].substr(0, 18), "4,144,53,\"2,7169\",");
  EXPECT_EQ(l.back().substr(0, 9), "# target=");
}

TEST(Cli, EvalToleranceModeJson) {
  const Outcome r = cli({"eval", "golden_ratio", "--tol", "1e-20", "--format", "json", "--precision", "30"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["termination"], "tolerance_met");
  EXPECT_EQ(doc["summary"]["bracketing"], true);
  EXPECT_EQ(doc["records"][0]["value"], "1");
  EXPECT_EQ(doc["summary"]["target"], "1.61803398874989484820458683437");
}

TEST(Cli, EvalUndefinedLevel) {
  const Outcome r = cli({"eval", "exp_alpha2", "--depth", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const std::vector<std::string> l = lines(r.out);
  EXPECT_EQ(l[2], "1,1,0,undef,");
}

TEST(Cli, EvalDivergenceExitsThree) {
  EXPECT_EQ(cli({"eval", "log_divergent_alpha_eq_gamma"}).code, kExitDivergence);
}

TEST(Cli, EvalIsDeterministic) {
  const Outcome a = cli({"eval", "brouncker_4_over_pi", "--depth", "30"});
  const Outcome b = cli({"eval", "brouncker_4_over_pi", "--depth", "30"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EvalSchemeFile) {
  const auto path = temp_file("eulercf_cli_scheme.json",
                              R"({"f": {"p": "1", "q": "0"}, "g": {"p": "1", "q": "0"}, "h": {"p": "1", "q": "0"},
                                  "seed_note": "golden ratio"})");
  const Outcome r = cli({"eval", path.string(), "--depth", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("5,13,8,1.625,"), std::string::npos);
  const auto bad = temp_file("eulercf_cli_bad_scheme.json", R"({"f": {"p": "0", "q": "0"}})");
  EXPECT_EQ(cli({"eval", bad.string()}).code, kExitUsage);
}

TEST(Cli, EvalPrecisionFromEnvironment) {
  ::setenv("CF_PRECISION", "bogus", 1);
  EXPECT_EQ(cli({"eval", "golden_ratio"}).code, kExitUsage);
  ::setenv("CF_PRECISION", "12", 1);
  const Outcome r = cli({"eval", "golden_ratio", "--depth", "40"});
  ::unsetenv("CF_PRECISION");
  EXPECT_NE(r.out.find("1.61803398875"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"eval", "no_such_entry"}).code, kExitUsage);
  EXPECT_EQ(cli({"eval", "golden_ratio", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(Cli, VerifySingleEntry) {
  const Outcome r = cli({"verify", "brouncker_4_over_pi"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, 26), "PASS  brouncker_4_over_pi ");
  EXPECT_NE(r.out.find("1 checked: 1 passed, 0 failed, 0 skipped"), std::string::npos);
}

TEST(Cli, VerifyDivergenceExitsThree) {
  const Outcome r = cli({"verify", "log_divergent_alpha_eq_gamma"});
  EXPECT_EQ(r.code, kExitDivergence);
  EXPECT_NE(r.out.find("termination=divergence_detected"), std::string::npos);
}

TEST(Cli, VerifyFamilyWithParamsAndReport) {
  const auto report = std::filesystem::temp_directory_path() / "eulercf_cli_report.json";
  const Outcome r = cli({"verify", "family_VII", "--params", "δ=1/2,λ=1/2,α=1", "--report", report.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(report);
  const nlohmann::json doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["passed"], 1);
  EXPECT_EQ(doc["results"][0]["verdict"], "PASS");
  EXPECT_EQ(cli({"verify", "family_VII", "--params", "δ=0,λ=1,α=1"}).code, kExitUsage);
}

TEST(Cli, VerifyFamilyParallelKeepsOrder) {
  const Outcome serial = cli({"verify", "IV"});
  const Outcome parallel = cli({"verify", "IV", "--jobs", "4"});
  EXPECT_EQ(serial.code, kExitOk);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST(Cli, VerifyFailureExitsOne) {
  const Outcome r = cli({"verify", "brouncker_4_over_pi", "--depth", "10"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_EQ(r.out.substr(0, 4), "FAIL");
}

TEST(Cli, TransformShowsInvariance) {
  const Outcome r = cli({"transform", "exp_alpha_neg1", "altsign", "--depth", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("invariance through level 5: ok"), std::string::npos);
  EXPECT_NE(r.out.find("2 + 1/(-3 + 2/(4 + 3/(-5 + 4/(6 + 5/(-7 + ...)))))"), std::string::npos);
}

TEST(Cli, TransformErrors) {
  EXPECT_EQ(cli({"transform", "golden_ratio", "flip"}).code, kExitUsage);
  EXPECT_EQ(cli({"transform", "golden_ratio", "scale:k->k-1"}).code, kExitUsage);
  const Outcome echo = cli({"transform", "golden_ratio"});
  EXPECT_EQ(echo.code, kExitOk);
  EXPECT_NE(echo.out.find("output equals input"), std::string::npos);
}

TEST(SchemeFile, ParsesIntegersAndStrings) {
  const RecurrenceScheme s = parse_scheme(R"({"f": {"p": 0, "q": 1}, "g": {"p": "1/2", "q": "1"}, "h": {"p": -3, "q": 0}})");
  EXPECT_EQ(s.triple(2).f, BigRational(2));
  EXPECT_EQ(s.triple(2).g, BigRational::parse("5/2"));
  EXPECT_EQ(s.triple(2).h, BigRational(-3));
  EXPECT_THROW(parse_scheme("not json"), std::invalid_argument);
  EXPECT_THROW(parse_scheme(R"({"f": {"p": "1"}, "g": {"p": "1", "q": "0"}, "h": {"p": "1", "q": "0"}})"),
               std::invalid_argument);
  EXPECT_THROW(parse_scheme(R"({"f": {"p": 1.5, "q": 0}, "g": {"p": "1", "q": "0"}, "h": {"p": "1", "q": "0"}})"),
               std::invalid_argument);
  EXPECT_THROW(load_scheme("/nonexistent/scheme.json"), std::runtime_error);
}

}  // namespace
}  // namespace eulercf::tools
