#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "etaforge/cli.hpp"

using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = etaforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExpandReportsCoefficients) {
  const auto r = run({"expand", "[1^2 11^2]", "--terms", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["command"], "expand");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["results"]["offset"], "1");
  EXPECT_EQ(j["results"]["coefficients"], Json::parse("[1,-2,-1,2,1]"));
}

TEST(Cli, PrecisionFromEnvironment) {
  ::setenv("ETAFORGE_PRECISION", "7", 1);
  const auto r = run({"expand", "[6^4]"});
  ::unsetenv("ETAFORGE_PRECISION");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["results"]["truncation"], 7);
  ::setenv("ETAFORGE_PRECISION", "abc", 1);
  EXPECT_EQ(run({"expand", "[6^4]"}).code, 2);
  ::unsetenv("ETAFORGE_PRECISION");
}

TEST(Cli, MembershipAndDimension) {
  const Json m = run({"membership", "[3^1 6^1 21^1 42^1]", "--level", "42"}).json();
  EXPECT_TRUE(m["results"]["is_cusp_form"].get<bool>());
  EXPECT_EQ(m["results"]["cusp_orders"].size(), 8u);
  const Json d = run({"dimension", "70"}).json();
  EXPECT_EQ(d["results"]["dimension"], 9);
}

TEST(Cli, ConductorAndAp) {
  const Json c = run({"conductor", "-7/25"}).json();
  EXPECT_EQ(c["results"]["conductor"], 70);
  const Json a = run({"ap", "27/16", "--primes", "2..13"}).json();
  const auto& rows = a["results"]["rows"];
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0]["a_p"], 1);  // p = 2 is good for 27/16
  EXPECT_EQ(rows[1]["note"], "skipped: bad reduction");
  EXPECT_EQ(rows[2]["a_p"], -2);
}

TEST(Cli, Theorem1RoundTrip) {
  const auto r = run({"verify-theorem1", "81/49"});
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = r.json();
  EXPECT_EQ(j["results"]["conductor"], 42);
  EXPECT_TRUE(j["results"]["tabulated_match"].get<bool>());
  EXPECT_EQ(j["results"]["combination"][0]["coefficient"], "2");
  EXPECT_EQ(j["results"]["verified_to"], 200);
}

TEST(Cli, Theorem2AndHyper) {
  const auto r = run({"verify-theorem2", "27/16", "--primes", "5..29"});
  ASSERT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_EQ(j["results"]["checked"], 7);
  EXPECT_TRUE(j["results"]["all_match"].get<bool>());
  const Json h = run({"hyper", "27/16", "--prime", "13"}).json();
  EXPECT_TRUE(h["results"]["identity_holds"].get<bool>());
  EXPECT_EQ(h["results"]["two_f1"], "2/13");
}

TEST(Cli, AperyAndPlainOutput) {
  EXPECT_EQ(run({"apery", "4", "2", "2", "1"}).json()["results"]["D"], "33001");
  const auto r = run({"--plain", "dimension", "33"});
  EXPECT_NE(r.out.find("= 3"), std::string::npos);
}

TEST(Cli, ErrorsUseExitCodeTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"conductor", "1/0"}).code, 2);
  EXPECT_EQ(run({"ap", "5", "--primes", "9..3"}).code, 2);
  const auto r = run({"conductor", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["status"], "error");
  EXPECT_EQ(run({"membership", "[1^2 11^2]", "--level", "13"}).code, 2);
}
