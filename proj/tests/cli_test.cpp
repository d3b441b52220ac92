#include <gtest/gtest.h>

#include <sstream>

#include "twopoint/cli.hpp"

using namespace twopoint;

namespace
{

struct Run
{
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(CliTest, OrbitalOfSym3)
{
  auto r = run({"orbital", "Sym(3)", "--alpha", "0", "--beta", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("self_paired=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("plus_kernel_order=1\n"), std::string::npos);
}

TEST(CliTest, InfoAndSubdegrees)
{
  auto info = run({"info", "PSL2(7)", "--json"});
  EXPECT_EQ(info.code, 0);
  EXPECT_NE(info.out.find("\"order\": 168"), std::string::npos);
  auto sub = run({"subdegrees", "Sym(5)"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("subdegrees=[1,4]"), std::string::npos);
}

TEST(CliTest, IngredientsReportRoundTrips)
{
  auto r = run({"--json", "verify", "cf-ingredients", "--p", "61"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto report = report_from_json(r.out);
  EXPECT_EQ(report.check, "cf-ingredients");
  EXPECT_EQ(report.claims.size(), 5u);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report_from_json(report_to_json(report)), report);
}

TEST(CliTest, ExitCodes)
{
  EXPECT_EQ(run({"verify", "ex42"}).code, 0);
  EXPECT_EQ(run({"verify", "cf-ingredients", "--p", "7", "--force"}).code, 1);
  EXPECT_EQ(run({"verify", "cf-ingredients", "--p", "7"}).code, 2);
  EXPECT_EQ(run({"verify", "ex42", "--p", "3", "--k", "2", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "prop31", "Sym(5)"}).code, 2);
  EXPECT_EQ(run({"info", "Sym(3"}).code, 2);
  EXPECT_EQ(run({"orbital", "Sym(3)", "--alpha", "0", "--beta", "9"}).code, 2);
  EXPECT_EQ(run({"verify", "sd", "--budget", "10"}).code, 2);

  auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"info", "Sym(3)", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliTest, TextModeMarksClaims)
{
  auto r = run({"verify", "prop31", "AGL1(7)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("✓"), std::string::npos);
  EXPECT_EQ(r.out.find("✗"), std::string::npos);
  EXPECT_EQ(r.out.find("\x1b["), std::string::npos);
}

TEST(CliTest, GlobalFlagsAnywhere)
{
  auto a = run({"--seed", "3", "--threads", "2", "verify", "cf-mini", "--json"});
  auto b = run({"verify", "cf-mini", "--threads", "2", "--json", "--seed", "3"});
  EXPECT_EQ(a.code, 0);
  auto ra = report_from_json(a.out), rb = report_from_json(b.out);
  ra.elapsed_ms = rb.elapsed_ms = 0;
  EXPECT_EQ(ra, rb);
}
