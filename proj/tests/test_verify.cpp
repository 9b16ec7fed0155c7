#include <gtest/gtest.h>

#include "macmahon/errors.hpp"
#include "macmahon/statistics.hpp"
#include "macmahon/sturm.hpp"
#include "macmahon/verify.hpp"

namespace macmahon {
namespace {

TEST(Sturm, RootCounts) {
  EXPECT_EQ(count_real_roots(IntPoly({1, 6, 1})), 2);
  EXPECT_EQ(count_real_roots(IntPoly({1, 1, 1})), 0);
  EXPECT_EQ(count_distinct_real_roots(IntPoly({1, 3, 3, 1})), 1);
  EXPECT_EQ(count_real_roots(IntPoly({1, 3, 3, 1})), 3);
  EXPECT_EQ(count_real_roots(IntPoly({-6, 11, -6, 1})), 3);
  EXPECT_EQ(count_real_roots(IntPoly({0, 0, 1})), 2);
  EXPECT_EQ(count_real_roots(IntPoly({5})), 0);
  EXPECT_THROW(count_real_roots(IntPoly()), ContractViolation);
}

TEST(Sturm, SquaredFactorsAndMixedMultiplicities) {
  // (t^2 + 1)^2 (t - 2)^3 (t + 5)
  IntPoly p = IntPoly({1, 0, 1}).pow(2) * IntPoly({-2, 1}).pow(3) * IntPoly({5, 1});
  EXPECT_EQ(count_distinct_real_roots(p), 2);
  EXPECT_EQ(count_real_roots(p), 4);
  EXPECT_FALSE(is_real_rooted(p));
  EXPECT_TRUE(is_real_rooted(IntPoly({-2, 1}).pow(3) * IntPoly({-1, 3}) * IntPoly({7, -2})));
}

TEST(Sturm, NegativeLeadingCoefficients) {
  EXPECT_EQ(count_real_roots(IntPoly({6, -5, -1}) * IntPoly({-1})), 2);
  EXPECT_EQ(count_real_roots(IntPoly({-3, 0, -7, 0, 2})), 2);
}

TEST(HStar, TypeBEulerianOneTwo) {
  auto r = hstar_report(IntPoly({1, 11, 11, 1}), 3);
  EXPECT_TRUE(r.palindromic);
  EXPECT_EQ(r.gorenstein_index, 1);
  EXPECT_TRUE(r.unimodal);
  EXPECT_TRUE(r.real_rooted);
}

TEST(HStar, NonRectangleTypeANotPalindromic) {
  IntPoly d = descent_poly(TypeA{Composition{1, 2}});
  EXPECT_EQ(d, IntPoly({1, 2}));
  auto r = hstar_report(d, 3);
  EXPECT_FALSE(r.palindromic);
  EXPECT_FALSE(r.gorenstein_index.has_value());
}

TEST(HStar, QuadraticAndContracts) {
  EXPECT_TRUE(hstar_report(IntPoly({1, 6, 1}), 2).real_rooted);
  EXPECT_FALSE(hstar_report(IntPoly({1, 1, 1}), 2).real_rooted);
  EXPECT_THROW(hstar_report(IntPoly(), 2), ContractViolation);
  EXPECT_THROW(hstar_report(IntPoly({1, -1}), 2), ContractViolation);
}

TEST(HStar, Unimodality) {
  EXPECT_TRUE(is_unimodal(IntPoly({1, 3, 3, 1})));
  EXPECT_TRUE(is_unimodal(IntPoly({1, 2, 2, 5})));
  EXPECT_FALSE(is_unimodal(IntPoly({2, 1, 2})));
  EXPECT_FALSE(is_unimodal(IntPoly({1, 3, 1, 3})));
}

TEST(Gorenstein, ProductCriterion) {
  auto a = gorenstein_product_check(PolytopeSpec::parse("simplex:2,simplex:2"));
  EXPECT_TRUE(a.gorenstein);
  EXPECT_EQ(a.index, 3);
  EXPECT_TRUE(a.consistent());
  auto b = gorenstein_product_check(PolytopeSpec::parse("simplex:1,simplex:2"));
  EXPECT_FALSE(b.gorenstein);
  EXPECT_TRUE(b.consistent());
  for (int n = 1; n <= 5; ++n)
    for (const auto& eta : compositions_of(n)) {
      auto c = gorenstein_product_check(PolytopeSpec::cross_polytopes(eta));
      EXPECT_TRUE(c.gorenstein);
      EXPECT_EQ(c.index, 1);
      EXPECT_EQ(c.hstar.degree(), n);
      EXPECT_EQ(c.hstar, descent_poly(TypeB{eta}));
      EXPECT_TRUE(c.consistent());
    }
}

TEST(Gorenstein, MixedProducts) {
  for (const char* s : {"simplex:1,cross:2", "simplex:3,simplex:3,simplex:3", "simplex:1,simplex:1,cross:1", "cross:1,simplex:1"}) {
    auto g = gorenstein_product_check(PolytopeSpec::parse(s));
    EXPECT_TRUE(g.consistent()) << s;
  }
}

TEST(VerifyTheoremA, Examples) {
  auto r = verify_theorem_A(Composition{2, 3}, 6);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.routes.size(), 3u);
  EXPECT_EQ(*r.numerator, carlitz_poly(TypeA{Composition{2, 3}}));
  BivariatePoly one;
  one.add_term(0, 0, 1);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(*verify_theorem_A(Composition{n}, n + 2).numerator, one);
  auto unit = verify_theorem_A(Composition{1}, 5).route("closedForm").series.at_q_one();
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(unit[static_cast<std::size_t>(k)], k + 1);
}

TEST(VerifyTheoremB, Examples) {
  auto r = verify_theorem_B(Composition{1, 2}, 6);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.routes.size(), 4u);
  auto s = verify_theorem_B(Composition{1}, 4);
  EXPECT_EQ(s.route("carlitz").series[1], QPoly({2, 1}));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(*verify_theorem_B(Composition{n}, n).numerator, cross_polytope_numerator(n));
}

TEST(VerifyTheoremB, RequiresWindow) { EXPECT_THROW(verify_theorem_B(Composition{1, 2}, 2), ContractViolation); }

TEST(VerifyTheoremB, JsonShape) {
  auto j = verify_theorem_B(Composition{1, 2}, 6).to_json();
  EXPECT_EQ(j["identity"], "theoremB");
  EXPECT_EQ(j["eta"], Json::array({1, 2}));
  EXPECT_EQ(j["K"], 6);
  EXPECT_EQ(j["verdict"], "pass");
  std::vector<std::string> keys;
  for (auto it = j["routes"].begin(); it != j["routes"].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"carlitz", "closedForm", "lattice", "barred"}));
  EXPECT_EQ(j["routes"]["carlitz"].get<std::string>().size(), 64u);
}

TEST(VerifyHypercube, Examples) {
  auto r = verify_cor_hypercube(1, 3);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.route("closedForm").series[1], QPoly({2, 1}));
  auto sq = verify_cor_hypercube(2, 6).route("carlitz").series.at_q_one();
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(sq[static_cast<std::size_t>(k)], (2 * k + 1) * (2 * k + 1));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(verify_cor_hypercube(n, n).route("carlitz").series[0], QPoly({1}));
}

TEST(VerifyColoured, PassesForSmallParts) {
  auto r = verify_coloured(Composition{1, 2}, 3, 6);
  EXPECT_EQ(r.verdict, Verdict::pass);
  auto e = r.route("ehrhart").series;
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(e[k].coeff(0) * 2, Integer(3 * k + 1) * (9 * k * k + 5 * k + 2));
}

TEST(VerifyColoured, OneColourIsTypeAAtQOne) {
  for (const auto& eta : compositions_of(4)) {
    auto c = verify_coloured(eta, 1, 6);
    auto a = verify_theorem_A(eta, 6);
    EXPECT_EQ(c.verdict, Verdict::pass);
    EXPECT_EQ(c.route("descent").series.at_q_one(), a.route("carlitz").series.at_q_one());
  }
}

TEST(VerifyColoured, LargePartCounterexample) {
  auto r = verify_coloured(Composition{6}, 5, 8);
  EXPECT_EQ(r.verdict, Verdict::mismatch_expected);
  EXPECT_EQ(*r.descent_polynomial, IntPoly({1, 73, 1253, 5609, 6685, 1920, 84}));
  EXPECT_TRUE(r.top_exceeds_first.value());
  ASSERT_TRUE(r.first_mismatch.has_value());
  EXPECT_EQ(r.to_json()["verdict"], "mismatch-expected");
}

TEST(VerifyCColoured, Examples) {
  auto r = verify_c_coloured({2, 3}, 4);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.route("descent").series[1], QPoly({12}));
  auto ones = verify_c_coloured({1, 1, 1}, 5);
  EXPECT_EQ(ones.route("descent").series.at_q_one(), verify_theorem_A(Composition{1, 1, 1}, 5).route("carlitz").series.at_q_one());
  for (int c = 1; c <= 3; ++c) {
    auto u = verify_c_coloured({c, c, c}, 5);
    auto v = verify_coloured(Composition{1, 1, 1}, c, 5);
    EXPECT_EQ(u.route("descent").series, v.route("descent").series);
  }
}

TEST(Report, FirstMismatchIsSmallestIndex) {
  auto r = verify_coloured(Composition{3}, 2, 5);
  if (r.verdict != Verdict::pass) {
    ASSERT_TRUE(r.first_mismatch.has_value());
    int k = r.first_mismatch->k;
    for (const auto& route : r.routes)
      for (int j = 0; j < k; ++j) EXPECT_EQ(route.series[j], r.routes.front().series[j]);
  }
}

TEST(Digest, StableAndSensitive) {
  TruncatedSeries a({QPoly({1}), QPoly({2, 1})});
  TruncatedSeries b({QPoly({1}), QPoly({2, 2})});
  EXPECT_EQ(digest(a), digest(TruncatedSeries({QPoly({1}), QPoly({2, 1})})));
  EXPECT_NE(digest(a), digest(b));
  EXPECT_EQ(digest(TruncatedSeries(0)).size(), 64u);
}

}  // namespace
}  // namespace macmahon
