#include "macmahon/series.hpp"

#include <string>

#include "macmahon/errors.hpp"

namespace macmahon {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw ContractViolation("truncation order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ContractViolation("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::generate(int order, const std::function<QPoly(int)>& coeff_at) {
  if (order < 0) throw ContractViolation("truncation order must be nonnegative");
  std::vector<QPoly> v;
  v.reserve(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) v.push_back(coeff_at(k));
  return TruncatedSeries(std::move(v));
}

std::vector<Integer> TruncatedSeries::at_q_one() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.at_one());
  return out;
}

QPoly q_int(int k) {
  if (k < 0) throw ContractViolation("q_int: negative argument");
  return QPoly(std::vector<Integer>(static_cast<std::size_t>(k), Integer(1)));
}

QPoly q_factorial(int k) {
  QPoly f = QPoly::constant(1);
  for (int i = 2; i <= k; ++i) f = f * q_int(i);
  return f;
}

QPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0) throw ContractViolation("q_binomial: negative argument");
  if (k > n) return {};
  k = std::min(k, n - k);
  // row[j] holds binom(m, j)_q for the current m, j <= k.
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPoly::constant(1);
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      // binom(m, j) = binom(m-1, j-1) + q^j binom(m-1, j)
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(static_cast<std::size_t>(j));
    }
  }
  return row[static_cast<std::size_t>(k)];
}

QPoly q_binomial_by_division(int n, int k) {
  if (n < 0 || k < 0) throw ContractViolation("q_binomial: negative argument");
  if (k > n) return {};
  return divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

TruncatedSeries series_from_rational(const BivariatePoly& numerator, int n, int K) {
  std::vector<QPoly> s(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) s[static_cast<std::size_t>(k)] = numerator.t_coefficient(k);
  // Multiply by 1/(1 - q^i t) = sum_j q^{ij} t^j, one factor at a time.
  for (int i = 0; i <= n; ++i)
    for (int k = 1; k <= K; ++k)
      s[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k - 1)].shifted(static_cast<std::size_t>(i));
  return TruncatedSeries(std::move(s));
}

TruncatedSeries mul_by_denominator(const TruncatedSeries& series, int n) {
  std::vector<QPoly> s(series.coefficients().begin(), series.coefficients().end());
  const int K = series.order();
  for (int i = 0; i <= n; ++i)
    for (int k = K; k >= 1; --k)
      s[static_cast<std::size_t>(k)] -= s[static_cast<std::size_t>(k - 1)].shifted(static_cast<std::size_t>(i));
  return TruncatedSeries(std::move(s));
}

TruncatedSeries series_from_rational_q1(const IntPoly& numerator, int n, int K) {
  std::vector<QPoly> s(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) s[static_cast<std::size_t>(k)] = QPoly::constant(numerator.coeff(static_cast<std::size_t>(k)));
  for (int i = 0; i <= n; ++i)
    for (int k = 1; k <= K; ++k) s[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k - 1)];
  return TruncatedSeries(std::move(s));
}

TruncatedSeries mul_by_denominator_q1(const TruncatedSeries& series, int n) {
  std::vector<QPoly> s(series.coefficients().begin(), series.coefficients().end());
  const int K = series.order();
  for (int i = 0; i <= n; ++i)
    for (int k = K; k >= 1; --k) s[static_cast<std::size_t>(k)] -= s[static_cast<std::size_t>(k - 1)];
  return TruncatedSeries(std::move(s));
}

TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw ContractViolation("hadamard: truncation orders differ (" + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()) + ")");
  return TruncatedSeries::generate(a.order(), [&](int k) { return a[k] * b[k]; });
}

BivariatePoly numerator_of(const TruncatedSeries& series, int n) {
  TruncatedSeries num = mul_by_denominator(series, n);
  for (int k = n + 1; k <= num.order(); ++k)
    if (!num[k].is_zero())
      throw InternalDefect("numerator_of: series has a numerator term at t^" + std::to_string(k) +
                           " above the expected degree " + std::to_string(n));
  auto cs = num.coefficients();
  return BivariatePoly::from_t_coefficients(cs.first(std::min<std::size_t>(cs.size(), static_cast<std::size_t>(n) + 1)));
}

}  // namespace macmahon
