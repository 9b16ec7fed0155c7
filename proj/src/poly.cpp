#include "macmahon/poly.hpp"

#include <algorithm>
#include <string>

#include "macmahon/errors.hpp"

namespace macmahon {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exp) {
  std::vector<Integer> v(exp + 1);
  v[exp] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPoly::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

IntPoly IntPoly::shifted(std::size_t e) const {
  if (is_zero()) return {};
  std::vector<Integer> v(e, Integer(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void IntPoly::add_term(std::size_t exp, const Integer& c) {
  if (c == 0) return;
  if (exp >= coeffs_.size()) coeffs_.resize(exp + 1);
  coeffs_[exp] += c;
  normalize();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly divide_exact(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) throw InternalDefect("divide_exact: division by the zero polynomial");
  if (dividend.is_zero()) return {};
  if (dividend.degree() < divisor.degree()) throw InternalDefect("divide_exact: inexact division");

  std::vector<Integer> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const int dd = divisor.degree();
  std::vector<Integer> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Integer& lead = divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    const Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw InternalDefect("divide_exact: leading coefficient does not divide");
    Integer f = top / lead;
    quot[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.coeff(static_cast<std::size_t>(j));
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; }))
    throw InternalDefect("divide_exact: nonzero remainder");
  return IntPoly(std::move(quot));
}

BivariatePoly BivariatePoly::from_t_coefficients(std::span<const IntPoly> coeffs) {
  BivariatePoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    auto cs = coeffs[k].coefficients();
    for (std::size_t e = 0; e < cs.size(); ++e) p.add_term(static_cast<int>(e), static_cast<int>(k), cs[e]);
  }
  return p;
}

void BivariatePoly::add_term(int q_exp, int t_exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{q_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BivariatePoly::t_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.t; }

IntPoly BivariatePoly::t_coefficient(int k) const {
  IntPoly out;
  auto it = terms_.lower_bound(Monomial{0, k});
  for (; it != terms_.end() && it->first.t == k; ++it) out.add_term(static_cast<std::size_t>(it->first.q), it->second);
  return out;
}

IntPoly BivariatePoly::at_q_one() const {
  IntPoly out;
  for (const auto& [m, c] : terms_) out.add_term(static_cast<std::size_t>(m.t), c);
  return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.q, m.t, c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.q + mb.q, ma.t + mb.t, ca * cb);
  return out;
}

Integer eval_q1(const IntPoly& p) { return p.at_one(); }
IntPoly eval_q1(const BivariatePoly& p) { return p.at_q_one(); }

}  // namespace macmahon
