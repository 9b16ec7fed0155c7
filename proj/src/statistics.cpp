#include "macmahon/statistics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_length(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxWordLength)) throw ContractViolation("words longer than 31 letters are not supported");
}

struct FamilyShape {
  std::vector<int> letters;  // sorted multiset
  int kind = 0;              // 0 = A, 1 = B, 2 = coloured (uniform or per letter)
  int uniform_colours = 1;
  std::vector<int> palette;  // per letter value, CColoured only
};

FamilyShape shape_of(const Family& family) {
  FamilyShape s;
  std::visit(overloaded{[&](const TypeA& f) {
                          for (int i = 0; i < f.eta.length(); ++i) s.letters.insert(s.letters.end(), static_cast<std::size_t>(f.eta.part(i)), i + 1);
                        },
                        [&](const TypeB& f) {
                          s.kind = 1;
                          for (int i = 0; i < f.eta.length(); ++i) s.letters.insert(s.letters.end(), static_cast<std::size_t>(f.eta.part(i)), i + 1);
                        },
                        [&](const Coloured& f) {
                          s.kind = 2;
                          s.uniform_colours = f.colours;
                          for (int i = 0; i < f.eta.length(); ++i) s.letters.insert(s.letters.end(), static_cast<std::size_t>(f.eta.part(i)), i + 1);
                        },
                        [&](const CColoured& f) {
                          s.kind = 2;
                          s.palette = f.palette;
                          s.letters.resize(f.palette.size());
                          std::iota(s.letters.begin(), s.letters.end(), 1);
                        }},
             family);
  return s;
}

// Visits every element whose multiset-permutation index is congruent to
// `shard` mod `shards`, accumulating descent masks into `hist`.
void histogram_shard(const FamilyShape& shape, unsigned shard, unsigned shards, std::vector<std::uint64_t>& hist) {
  std::vector<int> letters = shape.letters;
  const std::size_t n = letters.size();
  std::vector<int> decor(n), bounds(n), stdw(n);
  std::vector<Sign> signs(n);
  std::uint64_t index = 0;
  do {
    if (index++ % shards != shard) continue;
    switch (shape.kind) {
      case 0:
        ++hist[descent_mask_a(letters)];
        break;
      case 1: {
        stdw = standardise(letters);
        // Signed standardised values compared pairwise, with w_0 := 0.
        std::vector<int> vals(n);
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
          for (std::size_t i = 0; i < n; ++i) vals[i] = (m >> (n - 1 - i)) & 1u ? -stdw[i] : stdw[i];
          DescentMask mask = 0;
          int prev = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (prev > vals[i]) mask |= DescentMask{1} << i;
            prev = vals[i];
          }
          ++hist[mask];
        }
        break;
      }
      default: {
        for (std::size_t i = 0; i < n; ++i)
          bounds[i] = shape.palette.empty() ? shape.uniform_colours : shape.palette[static_cast<std::size_t>(letters[i] - 1)];
        std::fill(decor.begin(), decor.end(), 0);
        while (true) {
          ++hist[descent_mask_coloured(letters, decor)];
          std::size_t i = n;
          while (i-- > 0) {
            if (++decor[i] < bounds[i]) break;
            decor[i] = 0;
          }
          if (i == static_cast<std::size_t>(-1)) break;
        }
      }
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
}

}  // namespace

std::vector<int> standardise(std::span<const int> letters) {
  const std::size_t n = letters.size();
  int r = 0;
  for (int v : letters) r = std::max(r, v);
  // next label for each letter value: 1 + number of smaller letters
  std::vector<int> next(static_cast<std::size_t>(r) + 2, 0);
  for (int v : letters) ++next[static_cast<std::size_t>(v) + 1];
  next[0] = 1;
  for (std::size_t v = 1; v < next.size(); ++v) next[v] += next[v - 1];
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = next[static_cast<std::size_t>(letters[i])]++;
  return out;
}

SignedWord standardise(const SignedWord& w) { return SignedWord{standardise(w.letters), w.signs}; }

DescentMask descent_mask_a(std::span<const int> letters) {
  check_length(letters.size());
  DescentMask mask = 0;
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i - 1] > letters[i]) mask |= DescentMask{1} << i;
  return mask;
}

DescentMask descent_mask_b(std::span<const int> letters, std::span<const Sign> signs) {
  check_length(letters.size());
  if (signs.size() != letters.size()) throw ContractViolation("sign vector length differs from word length");
  std::vector<int> s = standardise(letters);
  DescentMask mask = 0;
  int prev = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    int v = signs[i] == Sign::minus ? -s[i] : s[i];
    if (prev > v) mask |= DescentMask{1} << i;
    prev = v;
  }
  return mask;
}

DescentMask descent_mask_b_direct(std::span<const int> letters, std::span<const Sign> signs) {
  check_length(letters.size());
  if (signs.size() != letters.size()) throw ContractViolation("sign vector length differs from word length");
  DescentMask mask = 0;
  int w_prev = 0;
  Sign e_prev = Sign::plus;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    int w = letters[i];
    Sign e = signs[i];
    bool descent = (e_prev == Sign::plus && e == Sign::plus && w_prev > w) ||
                   (e_prev == Sign::minus && e == Sign::minus && w_prev <= w) ||
                   (e_prev == Sign::plus && e == Sign::minus);
    if (descent) mask |= DescentMask{1} << i;
    w_prev = w;
    e_prev = e;
  }
  return mask;
}

DescentMask descent_mask_coloured(std::span<const int> letters, std::span<const int> colours) {
  check_length(letters.size());
  if (colours.size() != letters.size()) throw ContractViolation("colour vector length differs from word length");
  DescentMask mask = 0;
  int w_prev = 0;
  int g_prev = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    int w = letters[i];
    int g = colours[i];
    bool descent = (g_prev == 0 && g == 0 && w_prev > w) || (g_prev == g && g > 0 && w_prev >= w) || g_prev < g;
    if (descent) mask |= DescentMask{1} << i;
    w_prev = w;
    g_prev = g;
  }
  return mask;
}

DescentMask descent_mask(const Element& e) {
  return std::visit(overloaded{[](const Word& w) { return descent_mask_a(w.letters); },
                               [](const SignedWord& w) { return descent_mask_b(w.letters, w.signs); },
                               [](const ColouredWord& w) { return descent_mask_coloured(w.letters, w.colours); }},
                    e);
}

std::vector<int> mask_to_set(DescentMask mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) out.push_back(i);
  return out;
}

int mask_maj(DescentMask mask) {
  int s = 0;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) s += i;
  return s;
}

int mask_des(DescentMask mask) { return std::popcount(mask); }

std::vector<int> descent_set(const Element& e) { return mask_to_set(descent_mask(e)); }
int maj(const Element& e) { return mask_maj(descent_mask(e)); }
int des(const Element& e) { return mask_des(descent_mask(e)); }

int inv(std::span<const int> letters) {
  int count = 0;
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (letters[i] > letters[j]) ++count;
  return count;
}

std::vector<std::uint64_t> descent_mask_histogram(const Family& family, unsigned threads) {
  validate(family);
  FamilyShape shape = shape_of(family);
  const std::size_t n = shape.letters.size();
  if (n > 24) throw ContractViolation("descent histograms are limited to words of length <= 24");
  const std::size_t slots = std::size_t{1} << n;
  threads = std::max(1u, threads);
  if (cardinality(family) < 1'000'000) threads = 1;

  std::vector<std::vector<std::uint64_t>> parts(threads, std::vector<std::uint64_t>(slots, 0));
  if (threads == 1) {
    histogram_shard(shape, 0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { histogram_shard(shape, t, threads, parts[t]); });
    for (auto& th : pool) th.join();
  }
  for (unsigned t = 1; t < threads; ++t)
    for (std::size_t m = 0; m < slots; ++m) parts[0][m] += parts[t][m];
  return std::move(parts[0]);
}

BivariatePoly carlitz_poly(const Family& family, unsigned threads) {
  if (!std::holds_alternative<TypeA>(family) && !std::holds_alternative<TypeB>(family))
    throw ContractViolation("the Carlitz polynomial is defined for type A and type B families only");
  auto hist = descent_mask_histogram(family, threads);
  BivariatePoly p;
  for (std::size_t m = 0; m < hist.size(); ++m) {
    if (hist[m] == 0) continue;
    auto mask = static_cast<DescentMask>(m);
    p.add_term(mask_maj(mask), mask_des(mask), Integer(static_cast<unsigned long>(hist[m])));
  }
  return p;
}

IntPoly descent_poly(const Family& family, unsigned threads) {
  auto hist = descent_mask_histogram(family, threads);
  IntPoly p;
  for (std::size_t m = 0; m < hist.size(); ++m)
    if (hist[m] != 0) p.add_term(static_cast<std::size_t>(mask_des(static_cast<DescentMask>(m))), Integer(static_cast<unsigned long>(hist[m])));
  return p;
}

}  // namespace macmahon
