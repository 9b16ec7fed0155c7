#include "macmahon/ehrhart.hpp"

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

Rational factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

// Newton forward differences through values at 0..m, expanded into the
// monomial basis: L(k) = sum_j Delta^j L(0) * k(k-1)...(k-j+1)/j!.
EhrhartPolynomial newton_interpolate(const std::vector<Integer>& values) {
  std::vector<Rational> diffs(values.begin(), values.end());
  const std::size_t m = diffs.size();
  std::vector<Rational> result(m, Rational(0));
  std::vector<Rational> falling{Rational(1)};  // k(k-1)...(k-j+1)
  for (std::size_t j = 0; j < m; ++j) {
    Rational scale = diffs[0] / factorial(j);
    for (std::size_t i = 0; i < falling.size(); ++i) result[i] += scale * falling[i];
    for (std::size_t i = 0; i + 1 < diffs.size() - j; ++i) diffs[i] = diffs[i + 1] - diffs[i];
    std::vector<Rational> next(falling.size() + 1, Rational(0));
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * Rational(static_cast<long>(j));
    }
    falling = std::move(next);
  }
  return EhrhartPolynomial(std::move(result));
}

template <class Shape>
EhrhartPolynomial interpolate(const Shape& shape, int n) {
  std::vector<Integer> values;
  for (int k = 0; k <= n; ++k) values.push_back(count_points(shape, k));
  EhrhartPolynomial p = newton_interpolate(values);
  for (int k = n + 1; k <= n + 2; ++k) {
    Integer actual = count_points(shape, k);
    if (p.evaluate(k) != Rational(actual))
      throw InternalDefect("Ehrhart interpolation disagrees with the lattice count at k = " + std::to_string(k));
  }
  return p;
}

}  // namespace

EhrhartPolynomial::EhrhartPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational EhrhartPolynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational EhrhartPolynomial::evaluate(const Rational& k) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * k + coeffs_[i];
  return acc;
}

std::string EhrhartPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (!unit || i == 0) s += macmahon::to_string(a);
    if (i > 0) {
      if (!unit) s += " ";
      s += "k";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Json EhrhartPolynomial::to_json() const {
  Json terms = Json::array();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) terms.push_back(Json::array({i, macmahon::to_string(coeffs_[i])}));
  return Json{{"vars", Json::array({"k"})}, {"terms", std::move(terms)}};
}

EhrhartPolynomial interpolate_ehrhart(const PolytopeSpec& spec) { return interpolate(spec, spec.dimension()); }

EhrhartPolynomial interpolate_ehrhart(const Block& block) { return interpolate(block, block.dim); }

bool reciprocity_check(const PolytopeSpec& spec, int k_max) {
  if (k_max < 1) throw ContractViolation("reciprocity_check needs k_max >= 1");
  EhrhartPolynomial p = interpolate_ehrhart(spec);
  const int sign = spec.dimension() % 2 == 0 ? 1 : -1;
  for (int k = 1; k <= k_max; ++k)
    if (p.evaluate(-k) != Rational(count_points(spec, k, true) * sign)) return false;
  return true;
}

Rational volume_distorted(const Composition& eta, int colours) {
  if (colours < 1) throw ContractViolation("colour count must be positive");
  Rational v(1);
  for (int d : eta.parts()) v *= block_volume(Block{BlockKind::distorted_cross, d, colours});
  return v;
}

Rational block_volume(const Block& block) {
  long base = 1;
  if (block.kind == BlockKind::cross) base = 2;
  if (block.kind == BlockKind::distorted_cross) base = block.colours;
  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(block.dim));
  Rational v = Rational(num) / factorial(static_cast<unsigned long>(block.dim));
  v.canonicalize();
  return v;
}

}  // namespace macmahon
