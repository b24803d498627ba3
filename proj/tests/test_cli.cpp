#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "knlab/cli/app.hpp"

using namespace knlab;
using knlab::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

const Json* find_check(const Json& report, const std::string& prefix) {
  for (const auto& c : report.at("checks"))
    if (c.at("name").get<std::string>().rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST(Cli, VerifyCorePassesWithManyChecks) {
  const Json j = run_json({"verify-core"});
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_GE(j.at("checks").size(), 30u);
  for (const auto& c : j.at("checks")) {
    EXPECT_EQ(c.at("status"), "pass") << c.dump();
    EXPECT_FALSE(c.at("paper_ref").get<std::string>().empty());
  }
}

TEST(Cli, SchemaFieldOrder) {
  const Json j = run_json({"horikawa"});
  std::vector<std::string> top, check;
  for (auto it = j.begin(); it != j.end(); ++it) top.push_back(it.key());
  EXPECT_EQ(top, (std::vector<std::string>{"params", "checks", "passed"}));
  const Json& c = j.at("checks").at(0);
  for (auto it = c.begin(); it != c.end(); ++it) check.push_back(it.key());
  EXPECT_EQ(check, (std::vector<std::string>{"name", "paper_ref", "status", "value", "expected", "tolerance"}));
}

TEST(Cli, JsonRoundTrip) {
  const Json j = run_json({"bicanonical", "--lambda1", "2", "--lambda2", "3"});
  const auto report = cli::Report::from_json(j);
  EXPECT_EQ(report.to_json(), j);
  EXPECT_EQ(Json::parse(report.to_json().dump()), j);
}

TEST(Cli, Deterministic) {
  const auto a = run({"construct", "--lambda1", "2", "--lambda2", "3", "--seed", "7", "--format", "json"});
  const auto b = run({"construct", "--lambda1", "2", "--lambda2", "3", "--seed", "7", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST(Cli, FaultRelatorSign) {
  const auto r = run({"verify-core", "--inject-fault", "relator-sign"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("(g2 g1) (g1 g2)^-1 g2^2 g1^-2"), std::string::npos) << r.err;
  const auto g = run({"group", "--subject", "gamma", "--inject-fault", "relator-sign"});
  EXPECT_EQ(g.code, 1);
}

TEST(Cli, FaultZ4Scale) {
  const Json j = run_json({"bicanonical", "--lambda1", "2", "--lambda2", "3", "--inject-fault", "z4-scale"}, 1);
  const Json* q2 = find_check(j, "z4^2 - z0 z3");
  ASSERT_NE(q2, nullptr);
  EXPECT_EQ(q2->at("status"), "fail");
  const Json* res = find_check(j, "quadric residual");
  ASSERT_NE(res, nullptr);
  EXPECT_NEAR(res->at("value").get<double>(), 3.0, 1e-6);
  EXPECT_EQ(run({"verify-core", "--inject-fault", "z4-scale"}).code, 1);
}

TEST(Cli, FaultChiHat) {
  EXPECT_EQ(run({"verify-core", "--inject-fault", "chi-hat"}).code, 1);
  EXPECT_EQ(run({"horikawa", "--inject-fault", "chi-hat"}).code, 1);
  EXPECT_EQ(run({"horikawa", "--chi", "3"}).code, 1);
  EXPECT_EQ(run({"horikawa"}).code, 0);
}

TEST(Cli, ConstructExamples) {
  const Json j = run_json({"construct", "--lambda1", "2", "--lambda2", "3", "--seed", "1"});
  const Json* inv = find_check(j, "(K^2, chi, p_g, q)");
  ASSERT_NE(inv, nullptr);
  EXPECT_EQ(inv->at("value"), Json::array({"4", "1", 0, 0}));

  const Json bad = run_json({"construct", "--lambda1", "2", "--lambda2", "4", "--coeffs", "4,1,0,0,0"}, 1);
  const Json* fa = find_check(bad, "free action");
  ASSERT_NE(fa, nullptr);
  EXPECT_EQ(fa->at("status"), "fail");
  EXPECT_NEAR(fa->at("value").at("point").at("E2").at("x").at(0).get<double>(), -2.0, 1e-12);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"construct", "--lambda1", "2", "--lambda2", "3", "--coeffs", "0,0,0,0,0"}).code, 2);
  EXPECT_EQ(run({"construct", "--lambda1", "2", "--lambda2", "3", "--coeffs", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"construct", "--lambda1", "0.5", "--lambda2", "3", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "--lambda1", "1", "--lambda2", "3", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "--lambda1", "2", "--lambda2", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "--lambda1", "2", "--lambda2", "3", "--coeffs", "1,0,0,0,0", "--seed", "2"}).code, 2);
  EXPECT_EQ(run({"construct", "--lambda1", "2", "--lambda2", "3", "--coeffs", "1.5,0,0,0,0"}).code, 2);
  EXPECT_EQ(run({"group", "--subject", "delta"}).code, 2);
  EXPECT_EQ(run({"verify-core", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify-core", "--inject-fault", "foo"}).code, 2);
  EXPECT_EQ(run({"horikawa", "--bound", "-1"}).code, 2);
  EXPECT_EQ(run({"horikawa", "--chi", "7/2"}).code, 2);
  EXPECT_EQ(run({"bicanonical", "--lambda1", "0", "--lambda2", "3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, PrecisionResolution) {
  EXPECT_EQ(cli::resolve_precision("", std::nullopt), 1e-12);
  EXPECT_EQ(cli::resolve_precision("", std::string("1e-8")), 1e-8);
  EXPECT_EQ(cli::resolve_precision("1e-6", std::string("1e-8")), 1e-6);
  EXPECT_THROW(cli::resolve_precision("", std::string("-1")), cli::UsageError);
  EXPECT_THROW(cli::resolve_precision("1e-6x", std::nullopt), cli::UsageError);

  auto params = [](const Result& r) { return Json::parse(r.out).at("params"); };
  const auto env = run({"construct", "--lambda1", "2", "--lambda2", "3", "--seed", "1", "--format", "json"}, "1e-9");
  EXPECT_EQ(params(env).at("precision").get<double>(), 1e-9);
  const auto flag = run({"construct", "--lambda1", "2", "--lambda2", "3", "--seed", "1", "--format", "json",
                         "--precision", "1e-7"},
                        "1e-9");
  EXPECT_EQ(params(flag).at("precision").get<double>(), 1e-7);
  EXPECT_EQ(run({"verify-core"}, "not-a-number").code, 2);
}

TEST(Cli, GroupSubjects) {
  const Json g = run_json({"group", "--subject", "gamma"});
  const Json* ab = find_check(g, "abelianization(Gamma)");
  ASSERT_NE(ab, nullptr);
  EXPECT_EQ(ab->at("value").at("factors"), Json::array({"2", "2", "2", "4"}));
  for (const std::string s : {"gamma1", "gamma2"}) {
    const Json j = run_json({"group", "--subject", s});
    bool found = false;
    for (const auto& c : j.at("checks"))
      if (c.at("name").get<std::string>().rfind("abelianization", 0) == 0) {
        found = true;
        EXPECT_EQ(c.at("value").at("free_rank"), 2);
        EXPECT_EQ(c.at("value").at("factors"), Json::array({"2", "2"}));
      }
    EXPECT_TRUE(found);
  }
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "kn_lab_report.json";
  const auto r = run({"horikawa", "--format", "json", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_TRUE(j.at("passed").get<bool>());
  std::remove(path.c_str());
}
