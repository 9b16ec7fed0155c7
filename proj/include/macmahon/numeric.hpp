#pragma once

#include <gmpxx.h>

#include <string>

namespace macmahon {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q" in lowest terms, or just "p" for integers.
inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace macmahon
