#pragma once

#include <string>
#include <vector>

#include "macmahon/permutations.hpp"
#include "macmahon/poly.hpp"

namespace macmahon::testing {

struct GoldenRow {
  Composition eta;
  IntPoly poly;
};

/// Parses "t^3 + 11 t^2 + 11 t + 1" (also "t+1").
IntPoly parse_t_polynomial(const std::string& text);

/// Rows of tests/golden/appendix_b.txt: "eta<TAB>polynomial", '#' comments.
std::vector<GoldenRow> load_appendix_golden();

}  // namespace macmahon::testing
