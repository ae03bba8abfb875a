#include <sstream>

#include <gtest/gtest.h>

#include "binomcong_cli/cli.hpp"

using binomcong::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComputeSum) {
  const auto r = run({"compute", "sum", "--a", "4", "--b", "2", "--num", "-1", "--den", "1", "--prime", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, ComputeSymbol) {
  EXPECT_EQ(run({"compute", "symbol", "--kind", "jacobi", "--top", "2", "--bottom", "7"}).out, "1\n");
  EXPECT_EQ(run({"compute", "symbol", "--kind", "cubic", "--alpha", "-8,-18", "--bottom", "13"}).out, "w^1\n");
  EXPECT_EQ(run({"compute", "symbol", "--kind", "quartic", "--alpha", "0,1", "--bottom", "3"}).out, "i^2\n");
  EXPECT_EQ(run({"compute", "symbol", "--kind", "cubic", "--alpha", "1,2", "--bottom", "9"}).code, 2);
}

TEST(Cli, ComputeTsumAndLucas) {
  EXPECT_EQ(run({"compute", "tsum", "--n", "4", "--m", "3", "--r", "0"}).out, "5\n");
  EXPECT_EQ(run({"compute", "lucas", "--P", "1", "--Q", "-1", "--n", "10", "--prime", "101"}).out, "U=55 V=22\n");
  EXPECT_EQ(run({"compute", "lucas", "--P", "1", "--Q", "-1", "--n", "10"}).out, "U=55 V=123\n");
}

TEST(Cli, RepresentAndClassGroup) {
  EXPECT_EQ(run({"represent", "--form", "1,0,15", "--prime", "31"}).out, "(-4,-1) (-4,1) (4,-1) (4,1)\n");
  const auto h = run({"classgroup", "--disc", "-207"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(std::count(h.out.begin(), h.out.end(), '\n'), 6);
  EXPECT_EQ(run({"classgroup", "--disc", "-3"}).out, "[1,1,1]\n");
  EXPECT_EQ(run({"classgroup", "--disc", "-5"}).code, 2);
  EXPECT_EQ(run({"represent", "--form", "1,2", "--prime", "31"}).code, 2);
}

TEST(Cli, Primes) { EXPECT_EQ(run({"primes", "--limit", "30"}).out, "2 3 5 7 11 13 17 19 23 29\n"); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "no-such-id"}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "thm-2.6", "--max-prime", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "thm-2.6", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "thm-2.6", "--all"}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "thm-2.6", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"compute", "sum", "--a", "4", "--b", "2", "--prime", "9"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--id", "thm-3.8", "--max-prime", "2000", "--format", "json"}).code, 0);
  const auto disputed = run({"verify", "--id", "thm-4.4", "--max-prime", "100", "--format", "json"});
  EXPECT_EQ(disputed.code, 0);
  EXPECT_EQ(run({"verify", "--id", "thm-4.4", "--max-prime", "100", "--strict"}).code, 1);
}

TEST(Cli, JsonRoundTrip) {
  const auto r = run({"verify", "--id", "thm-4.4", "--max-prime", "100", "--format", "json"});
  const auto parsed = nlohmann::json::parse(r.out);
  ASSERT_EQ(parsed.size(), 1u);
  const auto report = binomcong::cli::report_from_json(parsed[0]);
  EXPECT_EQ(report, binomcong::verify_range("thm-4.4", 100));
  EXPECT_EQ(binomcong::cli::to_json(report), parsed[0]);
  EXPECT_EQ(parsed[0]["status"], "disputed");
  EXPECT_FALSE(parsed[0]["failures"][0]["witnesses"].empty());
}

TEST(Cli, JsonIdenticalAcrossJobs) {
  const auto one = run({"verify", "--all", "--max-prime", "400", "--format", "json", "--jobs", "1"});
  const auto four = run({"verify", "--all", "--max-prime", "400", "--format", "json", "--jobs", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
}
