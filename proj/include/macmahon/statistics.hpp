#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "macmahon/permutations.hpp"
#include "macmahon/poly.hpp"

namespace macmahon {

/// Bit i is set iff i is a descent. Position 0 is the boundary descent
/// against w_0 := 0 (types B and coloured). Words are limited to n <= 31.
using DescentMask = std::uint32_t;

inline constexpr int kMaxWordLength = 31;

/// Left-to-right relabelling of a multiset word into a permutation of 1..n.
std::vector<int> standardise(std::span<const int> letters);
SignedWord standardise(const SignedWord& w);

DescentMask descent_mask_a(std::span<const int> letters);
/// Via standardisation: compare signed standardised values with w_0 := 0.
DescentMask descent_mask_b(std::span<const int> letters, std::span<const Sign> signs);
/// The three-case characterisation read directly off (w, epsilon).
DescentMask descent_mask_b_direct(std::span<const int> letters, std::span<const Sign> signs);
/// Coloured rule with w_0^{gamma_0} := 0^0 and the fixed order
/// 1^{c-1} < ... < r^{c-1} < ... < 1^0 < ... < r^0.
DescentMask descent_mask_coloured(std::span<const int> letters, std::span<const int> colours);

DescentMask descent_mask(const Element& e);

std::vector<int> descent_set(const Element& e);
std::vector<int> mask_to_set(DescentMask mask);
int mask_maj(DescentMask mask);
int mask_des(DescentMask mask);

int maj(const Element& e);
int des(const Element& e);

int inv(std::span<const int> letters);
inline int inv(const Word& w) { return inv(w.letters); }

/// Number of family elements per descent set, indexed by mask. Families
/// larger than a few million elements are sharded across `threads`.
std::vector<std::uint64_t> descent_mask_histogram(const Family& family, unsigned threads = 1);

/// sum over the family of q^maj t^des. Only types A and B; other families
/// raise ContractViolation.
BivariatePoly carlitz_poly(const Family& family, unsigned threads = 1);

/// sum over the family of t^des, any family.
IntPoly descent_poly(const Family& family, unsigned threads = 1);

}  // namespace macmahon
