#pragma once

#include <span>
#include <vector>

#include "macmahon/permutations.hpp"
#include "macmahon/polytope.hpp"
#include "macmahon/series.hpp"

namespace macmahon {

/// Transfer map from k*Delta_d to the order polytope:
/// (k - x_1 - ... - x_d, k - x_2 - ... - x_d, ..., k - x_d).
/// Throws ContractViolation unless x lies in k*Delta_d.
std::vector<long> phi(long k, int d, std::span<const long> x);

/// Coordinate sum of phi over each block of eta.
long mu(long k, const Composition& eta, std::span<const long> x);
/// mu of the coordinatewise absolute value; x must lie in k times the
/// product of cross polytopes.
long mu_bar(long k, const Composition& eta, std::span<const long> x);

/// Coefficient k is sum over the k-th dilate of q^weight, with mu on simplex
/// blocks and mu_bar on cross blocks. Blocks are enumerated separately and
/// combined by Hadamard products. Distorted cross blocks are rejected.
TruncatedSeries weighted_series(const Block& block, int K);
TruncatedSeries weighted_series(const PolytopeSpec& spec, int K);

/// prod_i sum_{j=0}^{eta_i} q^{j(j-1)/2} [eta_i choose j]_q [k-j+eta_i choose eta_i]_q
QPoly closed_form_coeff(const Composition& eta, int k);

}  // namespace macmahon
