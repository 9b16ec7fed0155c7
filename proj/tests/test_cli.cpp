#include <gtest/gtest.h>

#include <sstream>

#include "macmahon/cli.hpp"
#include "macmahon/poly_io.hpp"
#include "support/golden.hpp"

namespace macmahon {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "macmahon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliStats, SignedExample) {
  auto r = run({"stats", "--family", "B", "--eta", "2,3", "--", "-2 -2 1 2 -1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Des={0,1,4} maj=5 des=3\n");
}

TEST(CliStats, UnsignedExampleAndJson) {
  auto r = run({"stats", "--family", "A", "--eta", "2,3", "--format", "json", "--", "2 2 1 2 1"});
  EXPECT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["Des"], Json::array({2, 4}));
  EXPECT_EQ(j["maj"], 6);
  EXPECT_EQ(j["inv"], 5);
}

TEST(CliStats, IdentityAndErrors) {
  EXPECT_EQ(run({"stats", "--family", "A", "--eta", "1,1,1", "--", "1 2 3"}).out, "Des={} maj=0 des=0\n");
  EXPECT_EQ(run({"stats", "--family", "A", "--eta", "2,3", "--", "2 2 x"}).code, 2);
  EXPECT_EQ(run({"stats", "--family", "A", "--eta", "2,3", "--", "1 1 1 2 2 2"}).code, 2);
  EXPECT_EQ(run({"stats", "--family", "Z", "--eta", "1", "--", "1"}).code, 2);
}

TEST(CliPoly, CarlitzLatexAndPlain) {
  auto r = run({"poly", "carlitz", "--family", "B", "--eta", "1,2", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q^3 t^3 + (3 q^3 + 5 q^2 + 3 q) t^2 + (3 q^2 + 5 q + 3) t + 1\n");
  EXPECT_EQ(run({"poly", "carlitz", "--family", "A", "--eta", "2,3"}).out,
            "(q^6 + q^5 + q^4) t^2 + (q^4 + 2 q^3 + 2 q^2 + q) t + 1\n");
}

TEST(CliPoly, DescentExamples) {
  EXPECT_EQ(run({"poly", "descent", "--family", "B", "--eta", "1,1,1"}).out, "t^3 + 23 t^2 + 23 t + 1\n");
  EXPECT_EQ(run({"poly", "descent", "--family", "A", "--eta", "1"}).out, "1\n");
  EXPECT_EQ(run({"poly", "descent", "--family", "coloured", "--eta", "6", "-c", "5"}).out,
            "84 t^6 + 1920 t^5 + 6685 t^4 + 5609 t^3 + 1253 t^2 + 73 t + 1\n");
}

TEST(CliPoly, CarlitzOfColouredIsUsageError) {
  auto r = run({"poly", "carlitz", "--family", "coloured", "--eta", "1,2", "-c", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliPoly, JsonAndCsv) {
  auto j = Json::parse(run({"poly", "descent", "--family", "B", "--eta", "1,1", "--format", "json"}).out);
  EXPECT_EQ(j["polynomial"]["terms"], Json::parse(R"([[0,"1"],[1,"6"],[2,"1"]])"));
  EXPECT_EQ(run({"poly", "descent", "--family", "B", "--eta", "1,1", "--format", "csv"}).out, "t_exp,coeff\n0,1\n1,6\n2,1\n");
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(run({"verify", "theoremB", "--eta", "1,2", "-K", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "theoremA", "--eta", "1", "-K", "1"}).code, 0);
  EXPECT_EQ(run({"verify", "theoremA", "--eta", "1,2", "-K", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense", "--eta", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "hypercube", "-n", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "ccoloured", "--palette", "2,3"}).code, 0);
}

TEST(CliVerify, GlobalOptionsBeforeOrAfterSubcommand) {
  auto a = run({"--format", "json", "-K", "6", "verify", "theoremB", "--eta", "1,2"});
  auto b = run({"verify", "theoremB", "--eta", "1,2", "-K", "6", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["K"], 6);
}

TEST(CliVerify, ColouredCounterexampleEchoesPolynomial) {
  auto r = run({"verify", "coloured", "--eta", "6", "-c", "5", "-K", "8", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "mismatch-expected");
  EXPECT_EQ(j["topExceedsFirst"], true);
  EXPECT_EQ(j["descentPolynomial"]["terms"].back(), Json::parse(R"([6,"84"])"));
}

TEST(CliEhrhart, DistortedCross) {
  auto j = Json::parse(run({"ehrhart", "--spec", "dcross:2:3", "--format", "json"}).out);
  EXPECT_EQ(j["text"], "9/2 k^2 + 5/2 k + 1");
  EXPECT_EQ(j["counts"][1], "8");
  EXPECT_EQ(j["reciprocity"], true);
  auto k = Json::parse(run({"ehrhart", "--spec-json", R"({"blocks":[{"kind":"dcross","dim":2,"c":3}]})", "--format", "json"}).out);
  EXPECT_EQ(j, k);
  EXPECT_EQ(run({"ehrhart", "--spec", "blob:2"}).code, 2);
}

TEST(CliHstar, FamilyAndSpec) {
  auto j = Json::parse(run({"hstar", "--family", "B", "--eta", "1,2", "--format", "json"}).out);
  EXPECT_EQ(j["report"]["palindromic"], true);
  EXPECT_EQ(j["report"]["gorensteinIndex"], 1);
  EXPECT_EQ(j["report"]["realRooted"], true);
  auto g = Json::parse(run({"hstar", "--spec", "simplex:2,simplex:2", "--format", "json"}).out);
  EXPECT_EQ(g["report"]["gorensteinIndex"], 3);
  EXPECT_EQ(g["product"]["consistent"], true);
}

TEST(CliAppendix, SmallTables) {
  EXPECT_EQ(run({"appendix-table", "--n-max", "1"}).out, "(1): t + 1\n");
  EXPECT_EQ(run({"appendix-table", "--n-max", "2"}).out, "(1): t + 1\n(2): t^2 + 2 t + 1\n(1,1): t^2 + 6 t + 1\n");
  EXPECT_EQ(run({"appendix-table", "--n-max", "0"}).code, 2);
}

TEST(CliAppendix, LatexLayout) {
  auto r = run({"appendix-table", "--n-max", "2", "--format", "latex"});
  EXPECT_EQ(r.out,
            "\\begin{longtable}{cc|c}\n\\centering\n$n$ & $\\eta$ & $B_{\\eta}(t)$ \\\\\n \\hline\n"
            "$1$ & $(1)$ & $t + 1$ \\\\\n & & \\\\\n$2$ & $(2)$ & $t^2 + 2 t + 1$ \\\\\n & $(1,1)$ & $t^2 + 6 t + 1$ \\\\\n"
            "\\end{longtable}\n");
}

TEST(CliAppendix, GoldenRowsAppearInOrder) {
  auto r = run({"appendix-table", "--n-max", "6", "--format", "json"});
  auto table = Json::parse(r.out);
  auto golden = testing::load_appendix_golden();
  std::size_t pos = 0, matched = 0;
  for (const auto& row : golden) {
    if (row.eta.size() > 6) continue;
    std::vector<int> parts(row.eta.parts().begin(), row.eta.parts().end());
    while (pos < table.size() && table[pos]["eta"] != Json(parts)) ++pos;
    ASSERT_LT(pos, table.size()) << row.eta.to_string();
    EXPECT_EQ(univariate_from_json(table[pos]["polynomial"]), row.poly) << row.eta.to_string();
    ++matched;
  }
  EXPECT_EQ(matched, 28u);
}

TEST(CliOutput, Deterministic) {
  auto a = run({"appendix-table", "--n-max", "5", "--format", "json", "--threads", "1"});
  auto b = run({"appendix-table", "--n-max", "5", "--format", "json", "--threads", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CliUsage, HelpAndMissingSubcommand) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"stats", "--bogus"}).code, 2);
}

}  // namespace
}  // namespace macmahon
