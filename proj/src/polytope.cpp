#include "macmahon/polytope.hpp"

#include <charconv>

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

// Every block is {x : sum_i cost(x_i) <= budget, x_i >= floor} for a
// piecewise-linear integer cost; the interior tightens the budget by one
// and (for simplices) lifts the floor to 1.
struct BlockRule {
  long budget;
  bool nonnegative;  // simplex-like: coordinates bounded below by 0 (1 when open)
  long positive_slope;
  long negative_slope;
  long floor;
};

bool simplex_like(const Block& b) {
  return b.kind == BlockKind::simplex || (b.kind == BlockKind::distorted_cross && b.colours == 1);
}

BlockRule rule_for(const Block& b, long k, bool open) {
  const long shrink = open ? 1 : 0;
  if (simplex_like(b)) return BlockRule{k - shrink, true, 1, 0, shrink};
  if (b.kind == BlockKind::cross) return BlockRule{k - shrink, false, 1, 1, 0};
  const long c1 = b.colours - 1;
  return BlockRule{c1 * k - shrink, false, c1, 1, 0};
}

long cost(const BlockRule& r, long x) { return x >= 0 ? r.positive_slope * x : -r.negative_slope * x; }

long parse_long(std::string_view tok, const char* what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
    throw ContractViolation(std::string("polytope spec: cannot parse ") + what + " '" + std::string(tok) + "'");
  return v;
}

class PointWalker {
 public:
  PointWalker(std::span<const Block> blocks, long k, bool open, const std::function<void(std::span<const long>)>& visit)
      : blocks_(blocks), k_(k), open_(open), visit_(visit) {
    int n = 0;
    for (const auto& b : blocks_) n += b.dim;
    point_.assign(static_cast<std::size_t>(n), 0);
  }

  void run() {
    if (k_ < 0) throw ContractViolation("dilation factor must be nonnegative");
    walk_block(0, 0);
  }

 private:
  void walk_block(std::size_t block, std::size_t offset) {
    if (block == blocks_.size()) {
      visit_(point_);
      return;
    }
    BlockRule r = rule_for(blocks_[block], k_, open_);
    if (r.budget < 0) return;
    walk_coord(block, offset, 0, r, r.budget);
  }

  void walk_coord(std::size_t block, std::size_t offset, int i, const BlockRule& r, long rem) {
    const int d = blocks_[block].dim;
    if (i == d) {
      walk_block(block + 1, offset + static_cast<std::size_t>(d));
      return;
    }
    const long lo = r.nonnegative ? r.floor : -rem / r.negative_slope;
    const long hi = rem / r.positive_slope;
    for (long x = lo; x <= hi; ++x) {
      long c = cost(r, x);
      if (c > rem) continue;
      point_[offset + static_cast<std::size_t>(i)] = x;
      walk_coord(block, offset, i + 1, r, rem - c);
    }
  }

  std::span<const Block> blocks_;
  long k_;
  bool open_;
  const std::function<void(std::span<const long>)>& visit_;
  LatticePoint point_;
};

const char* kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::simplex:
      return "simplex";
    case BlockKind::cross:
      return "cross";
    case BlockKind::distorted_cross:
      return "dcross";
  }
  return "?";
}

Block make_block(std::string_view kind, long dim, long colours) {
  if (dim < 1) throw ContractViolation("polytope spec: block dimension must be positive");
  if (kind == "simplex") return Block{BlockKind::simplex, static_cast<int>(dim), 2};
  if (kind == "cross") return Block{BlockKind::cross, static_cast<int>(dim), 2};
  if (kind == "dcross") {
    if (colours < 1) throw ContractViolation("polytope spec: distorted cross polytope needs c >= 1");
    return Block{BlockKind::distorted_cross, static_cast<int>(dim), static_cast<int>(colours)};
  }
  throw ContractViolation("polytope spec: unknown block kind '" + std::string(kind) + "'");
}

}  // namespace

PolytopeSpec::PolytopeSpec(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ContractViolation("polytope spec needs at least one block");
  for (const auto& b : blocks_) {
    if (b.dim < 1) throw ContractViolation("block dimension must be positive");
    if (b.kind == BlockKind::distorted_cross && b.colours < 1) throw ContractViolation("distorted cross polytope needs c >= 1");
    dimension_ += b.dim;
  }
}

PolytopeSpec PolytopeSpec::parse(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::vector<std::string_view> fields;
    std::size_t s = 0;
    while (true) {
      std::size_t colon = item.find(':', s);
      fields.push_back(item.substr(s, colon == std::string_view::npos ? std::string_view::npos : colon - s));
      if (colon == std::string_view::npos) break;
      s = colon + 1;
    }
    if (fields.size() < 2) throw ContractViolation("polytope spec: expected kind:dim in '" + std::string(item) + "'");
    bool is_dcross = fields[0] == "dcross";
    if (fields.size() != (is_dcross ? 3u : 2u))
      throw ContractViolation("polytope spec: wrong number of fields in '" + std::string(item) + "'");
    blocks.push_back(make_block(fields[0], parse_long(fields[1], "dimension"), is_dcross ? parse_long(fields[2], "colour count") : 2));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PolytopeSpec(std::move(blocks));
}

PolytopeSpec PolytopeSpec::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    throw ContractViolation("polytope JSON: expected {\"blocks\":[...]}");
  std::vector<Block> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.contains("kind") || !b.contains("dim")) throw ContractViolation("polytope JSON: block needs kind and dim");
    blocks.push_back(make_block(b["kind"].get<std::string>(), b["dim"].get<long>(), b.value("c", 2L)));
  }
  return PolytopeSpec(std::move(blocks));
}

PolytopeSpec PolytopeSpec::simplices(const Composition& eta) {
  std::vector<Block> b;
  for (int p : eta.parts()) b.push_back(Block{BlockKind::simplex, p, 2});
  return PolytopeSpec(std::move(b));
}

PolytopeSpec PolytopeSpec::cross_polytopes(const Composition& eta) {
  std::vector<Block> b;
  for (int p : eta.parts()) b.push_back(Block{BlockKind::cross, p, 2});
  return PolytopeSpec(std::move(b));
}

PolytopeSpec PolytopeSpec::distorted(const Composition& eta, int colours) {
  std::vector<Block> b;
  for (int p : eta.parts()) b.push_back(Block{BlockKind::distorted_cross, p, colours});
  return PolytopeSpec(std::move(b));
}

bool PolytopeSpec::has_distorted_blocks() const {
  for (const auto& b : blocks_)
    if (b.kind == BlockKind::distorted_cross) return true;
  return false;
}

std::string PolytopeSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    s += kind_name(blocks_[i].kind);
    s += ":" + std::to_string(blocks_[i].dim);
    if (blocks_[i].kind == BlockKind::distorted_cross) s += ":" + std::to_string(blocks_[i].colours);
  }
  return s;
}

Json PolytopeSpec::to_json() const {
  Json arr = Json::array();
  for (const auto& b : blocks_) {
    Json o{{"kind", kind_name(b.kind)}, {"dim", b.dim}};
    if (b.kind == BlockKind::distorted_cross) o["c"] = b.colours;
    arr.push_back(std::move(o));
  }
  return Json{{"blocks", std::move(arr)}};
}

bool contains(const Block& block, long k, std::span<const long> x, bool open) {
  if (x.size() != static_cast<std::size_t>(block.dim)) throw ContractViolation("contains: point dimension differs from block dimension");
  BlockRule r = rule_for(block, k, open);
  long total = 0;
  for (long xi : x) {
    if (r.nonnegative && xi < r.floor) return false;
    total += cost(r, xi);
  }
  return total <= r.budget;
}

bool contains(const PolytopeSpec& spec, long k, std::span<const long> x, bool open) {
  if (x.size() != static_cast<std::size_t>(spec.dimension()))
    throw ContractViolation("contains: point has dimension " + std::to_string(x.size()) + ", polytope has " +
                            std::to_string(spec.dimension()));
  std::size_t offset = 0;
  for (const auto& b : spec.blocks()) {
    if (!contains(b, k, x.subspan(offset, static_cast<std::size_t>(b.dim)), open)) return false;
    offset += static_cast<std::size_t>(b.dim);
  }
  return true;
}

void enumerate(const PolytopeSpec& spec, long k, bool open, const std::function<void(std::span<const long>)>& visit) {
  PointWalker(spec.blocks(), k, open, visit).run();
}

void enumerate(const Block& block, long k, bool open, const std::function<void(std::span<const long>)>& visit) {
  PointWalker(std::span<const Block>(&block, 1), k, open, visit).run();
}

Integer count_points(const Block& block, long k, bool open) {
  unsigned long n = 0;
  enumerate(block, k, open, [&](std::span<const long>) { ++n; });
  return Integer(n);
}

Integer count_points(const PolytopeSpec& spec, long k, bool open) {
  Integer total = 1;
  for (const auto& b : spec.blocks()) total *= count_points(b, k, open);
  return total;
}

}  // namespace macmahon
