#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace macmahon::testing {

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

PropertyResult q_binomial_pascal_and_symmetry(int n_max);
PropertyResult phi_round_trip(int d_max, int k_max);
PropertyResult mu_bar_sign_symmetry(std::uint32_t seed, int cases);
PropertyResult series_round_trip(std::uint32_t seed, int cases);
PropertyResult hadamard_laws(std::uint32_t seed, int cases);
PropertyResult stream_order_and_uniqueness(int n_max);

/// Every suite above with the default sizes used by the acceptance run.
std::vector<PropertyResult> all_property_suites();

}  // namespace macmahon::testing
