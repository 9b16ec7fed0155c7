#include "macmahon/weights.hpp"

#include <cstdlib>

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

// sum_j (k - sum_{i>=j} x_i) = d k - sum_i i x_i, for one block.
long block_mu(long k, std::span<const long> x) {
  long s = static_cast<long>(x.size()) * k;
  for (std::size_t i = 0; i < x.size(); ++i) s -= static_cast<long>(i + 1) * x[i];
  return s;
}

void check_dimension(const Composition& eta, std::span<const long> x) {
  if (x.size() != static_cast<std::size_t>(eta.size()))
    throw ContractViolation("point has dimension " + std::to_string(x.size()) + ", composition has size " + std::to_string(eta.size()));
}

}  // namespace

std::vector<long> phi(long k, int d, std::span<const long> x) {
  if (d < 1 || x.size() != static_cast<std::size_t>(d)) throw ContractViolation("phi: point dimension differs from d");
  if (!contains(Block{BlockKind::simplex, d, 2}, k, x)) throw ContractViolation("phi: point is not in the dilated simplex");
  std::vector<long> y(x.size());
  long tail = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    tail += x[i];
    y[i] = k - tail;
  }
  return y;
}

long mu(long k, const Composition& eta, std::span<const long> x) {
  check_dimension(eta, x);
  if (!contains(PolytopeSpec::simplices(eta), k, x)) throw ContractViolation("mu: point is not in the dilated simplex product");
  long s = 0;
  std::size_t offset = 0;
  for (int d : eta.parts()) {
    s += block_mu(k, x.subspan(offset, static_cast<std::size_t>(d)));
    offset += static_cast<std::size_t>(d);
  }
  return s;
}

long mu_bar(long k, const Composition& eta, std::span<const long> x) {
  check_dimension(eta, x);
  if (!contains(PolytopeSpec::cross_polytopes(eta), k, x)) throw ContractViolation("mu_bar: point is not in the dilated cross polytope product");
  std::vector<long> a(x.begin(), x.end());
  for (auto& v : a) v = std::labs(v);
  return mu(k, eta, a);
}

TruncatedSeries weighted_series(const Block& block, int K) {
  if (K < 0) throw ContractViolation("truncation order must be nonnegative");
  if (block.kind == BlockKind::distorted_cross) throw ContractViolation("no weight function is defined on distorted cross polytopes");
  const bool absolute = block.kind == BlockKind::cross;
  return TruncatedSeries::generate(K, [&](int k) {
    std::vector<Integer> counts;
    std::vector<long> a(static_cast<std::size_t>(block.dim));
    enumerate(block, k, false, [&](std::span<const long> x) {
      for (std::size_t i = 0; i < x.size(); ++i) a[i] = absolute ? std::labs(x[i]) : x[i];
      auto w = static_cast<std::size_t>(block_mu(k, a));
      if (counts.size() <= w) counts.resize(w + 1);
      ++counts[w];
    });
    return QPoly(std::move(counts));
  });
}

TruncatedSeries weighted_series(const PolytopeSpec& spec, int K) {
  auto blocks = spec.blocks();
  TruncatedSeries out = weighted_series(blocks[0], K);
  for (std::size_t i = 1; i < blocks.size(); ++i) out = hadamard(out, weighted_series(blocks[i], K));
  return out;
}

QPoly closed_form_coeff(const Composition& eta, int k) {
  if (k < 0) throw ContractViolation("dilation factor must be nonnegative");
  QPoly product = QPoly::constant(1);
  for (int m : eta.parts()) {
    QPoly sum;
    for (int j = 0; j <= m; ++j) sum += (q_binomial(m, j) * q_binomial(k - j + m, m)).shifted(static_cast<std::size_t>(j * (j - 1) / 2));
    product = product * sum;
  }
  return product;
}

}  // namespace macmahon
