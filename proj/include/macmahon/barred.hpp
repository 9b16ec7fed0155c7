#pragma once

#include <functional>
#include <string>
#include <vector>

#include "macmahon/permutations.hpp"
#include "macmahon/poly.hpp"
#include "macmahon/series.hpp"

namespace macmahon {

/// A family element with bars[i] bars in space i (0 = before the first
/// letter, n = after the last). Every descent position carries a bar.
struct BarredPermutation {
  Element base;
  std::vector<int> bars;

  friend bool operator==(const BarredPermutation&, const BarredPermutation&) = default;
};

/// Every barred permutation with exactly k bars over the family, each once:
/// bases in stream order, then bar vectors with the surplus k - des(base)
/// spread over the n+1 spaces in lexicographic order. CColoured is not
/// supported.
void for_each_barred(const Family& family, int k, const std::function<void(const BarredPermutation&)>& visit);
std::vector<BarredPermutation> gen_barred(const Family& family, int k);

/// q^{sum i b_i} t^{sum b_i}
Monomial wt(const BarredPermutation& b);

/// "||1 2|-1"
std::string render(const BarredPermutation& b);

/// sum of the q-part of wt over all barred permutations with k bars. Bases
/// are grouped by descent set (wt only sees the descent set), then every
/// admissible bar vector is enumerated.
QPoly oracle_coeff(const Family& family, int k, unsigned threads = 1);
TruncatedSeries oracle_series(const Family& family, int K, unsigned threads = 1);

}  // namespace macmahon
