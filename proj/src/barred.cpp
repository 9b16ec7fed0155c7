#include "macmahon/barred.hpp"

#include "macmahon/errors.hpp"
#include "macmahon/statistics.hpp"

namespace macmahon {

namespace {

void reject_ccoloured(const Family& family) {
  if (std::holds_alternative<CColoured>(family))
    throw ContractViolation("barred permutations are defined over A, B and coloured multiset families only");
}

// Visits every way to add `surplus` extra bars to `minimal` (length n+1),
// lexicographically in the added counts.
void spread(std::vector<int>& bars, std::size_t slot, int surplus, const std::vector<int>& minimal,
            const std::function<void(const std::vector<int>&)>& visit) {
  if (slot + 1 == bars.size()) {
    bars[slot] = minimal[slot] + surplus;
    visit(bars);
    return;
  }
  for (int extra = 0; extra <= surplus; ++extra) {
    bars[slot] = minimal[slot] + extra;
    spread(bars, slot + 1, surplus - extra, minimal, visit);
  }
}

std::vector<int> minimal_bars(DescentMask mask, int n) {
  std::vector<int> m(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = static_cast<int>(mask >> i & 1u);
  return m;
}

}  // namespace

void for_each_barred(const Family& family, int k, const std::function<void(const BarredPermutation&)>& visit) {
  reject_ccoloured(family);
  if (k < 0) throw ContractViolation("bar count must be nonnegative");
  const int n = word_length(family);
  BarredPermutation current;
  std::vector<int> bars(static_cast<std::size_t>(n) + 1);
  for_each_element(family, [&](const Element& e) {
    DescentMask mask = descent_mask(e);
    int d = mask_des(mask);
    if (d > k) return;
    current.base = e;
    spread(bars, 0, k - d, minimal_bars(mask, n), [&](const std::vector<int>& b) {
      current.bars = b;
      visit(current);
    });
  });
}

std::vector<BarredPermutation> gen_barred(const Family& family, int k) {
  std::vector<BarredPermutation> out;
  for_each_barred(family, k, [&](const BarredPermutation& b) { out.push_back(b); });
  return out;
}

Monomial wt(const BarredPermutation& b) {
  Monomial m;
  for (std::size_t i = 0; i < b.bars.size(); ++i) {
    m.q += static_cast<int>(i) * b.bars[i];
    m.t += b.bars[i];
  }
  return m;
}

std::string render(const BarredPermutation& b) {
  std::string letters = render(b.base);
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= letters.size()) {
    std::size_t space = letters.find(' ', start);
    if (space == std::string::npos) space = letters.size();
    if (space > start) tokens.push_back(letters.substr(start, space - start));
    start = space + 1;
  }
  std::string s;
  for (std::size_t i = 0; i < b.bars.size(); ++i) {
    s.append(static_cast<std::size_t>(b.bars[i]), '|');
    if (i < tokens.size()) {
      if (!s.empty() && s.back() != '|') s += ' ';
      s += tokens[i];
    }
  }
  return s;
}

QPoly oracle_coeff(const Family& family, int k, unsigned threads) {
  reject_ccoloured(family);
  if (k < 0) throw ContractViolation("bar count must be nonnegative");
  const int n = word_length(family);
  auto hist = descent_mask_histogram(family, threads);
  QPoly total;
  std::vector<int> bars(static_cast<std::size_t>(n) + 1);
  for (std::size_t m = 0; m < hist.size(); ++m) {
    if (hist[m] == 0) continue;
    auto mask = static_cast<DescentMask>(m);
    int d = mask_des(mask);
    if (d > k) continue;
    std::vector<Integer> by_weight;
    spread(bars, 0, k - d, minimal_bars(mask, n), [&](const std::vector<int>& b) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < b.size(); ++i) w += i * static_cast<std::size_t>(b[i]);
      if (by_weight.size() <= w) by_weight.resize(w + 1);
      ++by_weight[w];
    });
    total += QPoly(std::move(by_weight)) * Integer(static_cast<unsigned long>(hist[m]));
  }
  return total;
}

TruncatedSeries oracle_series(const Family& family, int K, unsigned threads) {
  if (K < 0) throw ContractViolation("truncation order must be nonnegative");
  return TruncatedSeries::generate(K, [&](int k) { return oracle_coeff(family, k, threads); });
}

}  // namespace macmahon
