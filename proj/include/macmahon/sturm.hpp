#pragma once

#include <vector>

#include "macmahon/poly.hpp"

namespace macmahon {

/// p, p', then negated pseudo-remainders scaled by a positive constant and
/// made primitive. The last entry is (up to a constant) gcd(p, p').
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Number of distinct real roots. Throws ContractViolation for p = 0.
int count_distinct_real_roots(const IntPoly& p);
/// Number of real roots counted with multiplicity.
int count_real_roots(const IntPoly& p);
/// All deg p complex roots are real. Nonzero constants are real-rooted.
bool is_real_rooted(const IntPoly& p);

}  // namespace macmahon
