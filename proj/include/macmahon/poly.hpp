#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "macmahon/numeric.hpp"

namespace macmahon {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Used both for polynomials in q (QPoly) and, after
/// specialising q = 1, for polynomials in t.
///
/// Canonical form: the highest stored coefficient is nonzero; the zero
/// polynomial stores nothing and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exp);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  std::span<const Integer> coefficients() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }

  Integer at_one() const;
  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;

  /// Multiplication by x^e.
  IntPoly shifted(std::size_t e) const;
  IntPoly derivative() const;
  IntPoly pow(unsigned e) const;

  /// gcd of the coefficients, always >= 0.
  Integer content() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  /// Adds c x^e in place.
  void add_term(std::size_t exp, const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    a *= Integer(-1);
    return a;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

using QPoly = IntPoly;

/// Quotient of an exact division; throws InternalDefect when the
/// divisor does not divide the dividend over the integers.
IntPoly divide_exact(const IntPoly& dividend, const IntPoly& divisor);

/// A (q-exponent, t-exponent) pair. Ordered by t first, then q, which is
/// the serialisation order.
struct Monomial {
  int q = 0;
  int t = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.q <=> b.q;
  }
};

/// Sparse polynomial in (q, t) with arbitrary-precision coefficients.
/// No stored coefficient is ever zero.
class BivariatePoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  BivariatePoly() = default;

  static BivariatePoly from_t_coefficients(std::span<const IntPoly> coeffs);

  void add_term(int q_exp, int t_exp, const Integer& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int t_degree() const;

  /// Coefficient of t^k as a polynomial in q.
  IntPoly t_coefficient(int k) const;

  /// Specialisation q = 1, a polynomial in t.
  IntPoly at_q_one() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  TermMap terms_;
};

Integer eval_q1(const IntPoly& p);
IntPoly eval_q1(const BivariatePoly& p);

}  // namespace macmahon
