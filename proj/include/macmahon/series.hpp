#pragma once

#include <functional>
#include <span>
#include <vector>

#include "macmahon/poly.hpp"

namespace macmahon {

/// Power series in t with coefficients in Z[q], truncated after t^order.
/// Always stores exactly order + 1 coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<QPoly> coeffs);

  static TruncatedSeries generate(int order, const std::function<QPoly(int)>& coeff_at);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QPoly& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  std::span<const QPoly> coefficients() const { return coeffs_; }

  /// Coefficients with q = 1.
  std::vector<Integer> at_q_one() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<QPoly> coeffs_;
};

/// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
QPoly q_int(int k);
/// [k]_q! = [1]_q [2]_q ... [k]_q.
QPoly q_factorial(int k);
/// Gaussian binomial coefficient via the q-Pascal recurrence; zero for k > n.
QPoly q_binomial(int n, int k);
/// Same value computed as [n]_q! / ([k]_q! [n-k]_q!) by exact division.
QPoly q_binomial_by_division(int n, int k);

/// numerator / prod_{i=0}^{n} (1 - q^i t), truncated after t^K. Terms of the
/// numerator above t^K are dropped.
TruncatedSeries series_from_rational(const BivariatePoly& numerator, int n, int K);

/// series * prod_{i=0}^{n} (1 - q^i t), truncated at the same order.
TruncatedSeries mul_by_denominator(const TruncatedSeries& series, int n);

/// The q = 1 versions: numerator(t) / (1 - t)^{n+1} and its inverse.
TruncatedSeries series_from_rational_q1(const IntPoly& numerator, int n, int K);
TruncatedSeries mul_by_denominator_q1(const TruncatedSeries& series, int n);

/// Coefficientwise product in t. Throws ContractViolation on order mismatch.
TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b);

/// Recovers the numerator N(q,t) with series = N / prod_{i=0}^n (1 - q^i t).
/// Throws InternalDefect if the product has terms above t^n within the
/// truncation window (the series is not of that form).
BivariatePoly numerator_of(const TruncatedSeries& series, int n);

}  // namespace macmahon
