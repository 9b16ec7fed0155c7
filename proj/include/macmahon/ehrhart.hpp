#pragma once

#include <string>
#include <vector>

#include "macmahon/numeric.hpp"
#include "macmahon/polytope.hpp"

namespace macmahon {

/// Polynomial in the dilation factor k with rational coefficients,
/// coefficients()[i] multiplying k^i.
class EhrhartPolynomial {
 public:
  EhrhartPolynomial() = default;
  explicit EhrhartPolynomial(std::vector<Rational> coeffs);

  std::span<const Rational> coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  Rational evaluate(const Rational& k) const;
  Rational evaluate(long k) const { return evaluate(Rational(k)); }

  /// "9/2 k^2 + 5/2 k + 1"
  std::string to_string() const;
  Json to_json() const;

  friend bool operator==(const EhrhartPolynomial&, const EhrhartPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Interpolates the lattice-point counts at k = 0..n (n the dimension) and
/// checks the result against the counts at k = n+1 and n+2. A disagreement
/// throws InternalDefect.
EhrhartPolynomial interpolate_ehrhart(const PolytopeSpec& spec);
EhrhartPolynomial interpolate_ehrhart(const Block& block);

/// L(-k) == (-1)^n * (interior count at k) for 1 <= k <= k_max.
bool reciprocity_check(const PolytopeSpec& spec, int k_max);

/// prod_i c^{eta_i} / eta_i!
Rational volume_distorted(const Composition& eta, int colours);
/// Euclidean volume of one block: 1/d!, 2^d/d! or c^d/d!.
Rational block_volume(const Block& block);

}  // namespace macmahon
