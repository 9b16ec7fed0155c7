#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "macmahon/numeric.hpp"
#include "macmahon/permutations.hpp"
#include "macmahon/poly_io.hpp"

namespace macmahon {

enum class BlockKind { simplex, cross, distorted_cross };

/// One factor of a product polytope.
///   simplex(d):            conv{0, e_1..e_d}
///   cross(d):              conv{+-e_1..+-e_d}
///   distorted_cross(d, c): conv{e_1..e_d, -(c-1)e_1..-(c-1)e_d}
struct Block {
  BlockKind kind = BlockKind::simplex;
  int dim = 1;
  int colours = 2;  // distorted_cross only

  friend bool operator==(const Block&, const Block&) = default;
};

/// Ordered product of blocks; coordinates are laid out block after block.
class PolytopeSpec {
 public:
  PolytopeSpec() = default;
  explicit PolytopeSpec(std::vector<Block> blocks);

  /// "simplex:2,cross:3,dcross:2:5"
  static PolytopeSpec parse(std::string_view text);
  /// {"blocks":[{"kind":"simplex","dim":2},{"kind":"dcross","dim":2,"c":5}]}
  static PolytopeSpec from_json(const Json& j);

  static PolytopeSpec simplices(const Composition& eta);
  static PolytopeSpec cross_polytopes(const Composition& eta);
  static PolytopeSpec distorted(const Composition& eta, int colours);

  std::span<const Block> blocks() const { return blocks_; }
  int dimension() const { return dimension_; }
  bool has_distorted_blocks() const;

  std::string to_string() const;
  Json to_json() const;

  friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;

 private:
  std::vector<Block> blocks_;
  int dimension_ = 0;
};

using LatticePoint = std::vector<long>;

/// Blockwise membership of x in the k-th dilate (its interior when `open`).
/// Throws ContractViolation if x has the wrong dimension.
bool contains(const PolytopeSpec& spec, long k, std::span<const long> x, bool open = false);
bool contains(const Block& block, long k, std::span<const long> x, bool open = false);

/// Visits every lattice point of the (open) k-th dilate once, in
/// lexicographic order of the coordinates.
void enumerate(const PolytopeSpec& spec, long k, bool open, const std::function<void(std::span<const long>)>& visit);
void enumerate(const Block& block, long k, bool open, const std::function<void(std::span<const long>)>& visit);

/// Lattice-point count as a product of per-block enumeration counts.
Integer count_points(const PolytopeSpec& spec, long k, bool open = false);
Integer count_points(const Block& block, long k, bool open = false);

}  // namespace macmahon
