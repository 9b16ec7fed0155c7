#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "macmahon/barred.hpp"
#include "macmahon/errors.hpp"
#include "macmahon/statistics.hpp"
#include "macmahon/weights.hpp"

namespace macmahon {
namespace {

TEST(Barred, ExampleIsGenerated) {
  Family f = TypeB{Composition{2, 1}};
  BarredPermutation target{SignedWord{{1, 2, 1}, {Sign::plus, Sign::plus, Sign::minus}}, {2, 0, 1, 0}};
  auto all = gen_barred(f, 3);
  EXPECT_NE(std::find(all.begin(), all.end(), target), all.end());
  EXPECT_EQ(render(target), "||1 2|-1");
  Monomial w = wt(target);
  EXPECT_EQ(w.q, 2);
  EXPECT_EQ(w.t, 3);
}

TEST(Barred, ZeroBarsGivesDescentFreeBases) {
  auto all = gen_barred(TypeB{Composition{1}}, 0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(render(all[0].base), "1");
  EXPECT_EQ(wt(all[0]).q, 0);
  EXPECT_EQ(wt(all[0]).t, 0);
}

TEST(Barred, OneLetterOneBar) {
  auto all = gen_barred(TypeB{Composition{1}}, 1);
  std::vector<std::string> names;
  QPoly total;
  for (const auto& b : all) {
    names.push_back(render(b));
    total.add_term(static_cast<std::size_t>(wt(b).q), 1);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"1|", "|1", "|-1"}));
  EXPECT_EQ(total, QPoly({2, 1}));
  EXPECT_EQ(oracle_coeff(TypeB{Composition{1}}, 1), QPoly({2, 1}));
}

TEST(Barred, EveryDescentSpaceHasABar) {
  for_each_barred(TypeB{Composition{1, 2}}, 4, [](const BarredPermutation& b) {
    for (int i : descent_set(b.base)) ASSERT_GE(b.bars[static_cast<std::size_t>(i)], 1);
    int sum = 0;
    for (int x : b.bars) sum += x;
    ASSERT_EQ(sum, 4);
  });
}

TEST(Barred, MinimalBarringCarriesMajAndDes) {
  for_each_element(TypeB{Composition{1, 2}}, [](const Element& e) {
    int d = des(e);
    for_each_barred(TypeB{Composition{1, 2}}, d, [&](const BarredPermutation& b) {
      if (b.base != e) return;
      ASSERT_EQ(wt(b).q, maj(e));
      ASSERT_EQ(wt(b).t, d);
    });
  });
}

TEST(Barred, ZeroBarsCountsDescentFreeElements) {
  for (const auto& eta : compositions_of(4)) {
    long free = 0;
    for_each_element(TypeB{eta}, [&](const Element& e) { free += des(e) == 0; });
    EXPECT_EQ(oracle_coeff(TypeB{eta}, 0), QPoly::constant(free));
  }
}

// Grouping by bar count and grouping by base produce the same multiset of weights.
TEST(Barred, PartitionIdentity) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& eta : compositions_of(n)) {
      Family f = TypeB{eta};
      for (int k = 0; k <= 5; ++k) {
        std::map<int, long> by_count;
        for_each_barred(f, k, [&](const BarredPermutation& b) { ++by_count[wt(b).q]; });
        std::map<int, long> by_base;
        for_each_element(f, [&](const Element& e) {
          for_each_barred(TypeB{eta}, k, [&](const BarredPermutation& b) {
            if (b.base == e) ++by_base[wt(b).q];
          });
        });
        ASSERT_EQ(by_count, by_base) << eta.to_string() << " k=" << k;
        QPoly from_stream;
        for (auto [q, c] : by_count) from_stream.add_term(static_cast<std::size_t>(q), c);
        ASSERT_EQ(from_stream, oracle_coeff(f, k)) << eta.to_string() << " k=" << k;
      }
    }
}

TEST(Barred, PerBaseGeometricSeries) {
  const int K = 5;
  for (int n = 1; n <= 3; ++n)
    for (const auto& eta : compositions_of(n)) {
      Family f = TypeB{eta};
      for_each_element(f, [&](const Element& e) {
        std::vector<QPoly> coeffs(K + 1);
        for (int k = 0; k <= K; ++k)
          for_each_barred(f, k, [&](const BarredPermutation& b) {
            if (b.base == e) coeffs[static_cast<std::size_t>(k)].add_term(static_cast<std::size_t>(wt(b).q), 1);
          });
        BivariatePoly mono;
        mono.add_term(maj(e), des(e), 1);
        ASSERT_EQ(TruncatedSeries(coeffs), series_from_rational(mono, n, K)) << render(e);
      });
    }
}

TEST(Barred, OracleMatchesClosedFormAndLattice) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& eta : compositions_of(n)) {
      auto lattice = weighted_series(PolytopeSpec::cross_polytopes(eta), 6);
      for (int k = 0; k <= 6; ++k) {
        QPoly o = oracle_coeff(TypeB{eta}, k);
        ASSERT_EQ(o, closed_form_coeff(eta, k)) << eta.to_string() << " k=" << k;
        ASSERT_EQ(o, lattice[k]) << eta.to_string() << " k=" << k;
      }
    }
}

TEST(Barred, ColouredOracleMatchesDistortedCrossCounts) {
  // eta with l ones and r - l twos: (ck+1)^l ((c^2/2)k^2 + ((c+2)/2)k + 1)^{r-l}
  for (int c = 1; c <= 4; ++c)
    for (const auto& eta : {Composition{1, 2}, Composition{2, 1, 1}, Composition{2, 2}}) {
      for (int k = 0; k <= 5; ++k) {
        Integer expect = 1;
        for (int p : eta.parts()) expect *= p == 1 ? Integer(c * k + 1) : Integer((c * c * k * k + (c + 2) * k) / 2 + 1);
        EXPECT_EQ(eval_q1(oracle_coeff(Coloured{eta, c}, k)), expect) << eta.to_string() << " c=" << c << " k=" << k;
      }
    }
}

TEST(Barred, RejectsPaletteFamiliesAndNegativeCounts) {
  EXPECT_THROW(gen_barred(CColoured{{2, 3}}, 1), ContractViolation);
  EXPECT_THROW(oracle_coeff(TypeB{Composition{1}}, -1), ContractViolation);
}

}  // namespace
}  // namespace macmahon
