#pragma once

#include <optional>
#include <string>
#include <vector>

#include "macmahon/permutations.hpp"
#include "macmahon/poly.hpp"
#include "macmahon/poly_io.hpp"
#include "macmahon/polytope.hpp"
#include "macmahon/series.hpp"

namespace macmahon {

enum class Identity { theorem_a, theorem_b, hypercube, coloured, c_coloured };
enum class Verdict { pass, fail, mismatch_expected };

/// "theoremA", "theoremB", "hypercube", "coloured", "ccoloured"
std::string identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
/// "pass", "fail", "mismatch-expected"
std::string verdict_name(Verdict v);

struct Route {
  std::string name;
  TruncatedSeries series{0};
  /// SHA-256 of the canonical JSON of the series.
  std::string digest;
};

struct Mismatch {
  int k = 0;
  std::string expected_route;
  std::string actual_route;
  QPoly expected;
  QPoly actual;
};

struct VerificationReport {
  Identity identity = Identity::theorem_a;
  std::vector<int> eta;      // composition, or the palette for c_coloured
  int colours = 0;           // coloured only
  int K = 0;
  std::vector<Route> routes;
  Verdict verdict = Verdict::pass;
  std::optional<Mismatch> first_mismatch;

  std::optional<BivariatePoly> numerator;     // Carlitz numerator (A, B, hypercube)
  std::optional<IntPoly> descent_polynomial;  // coloured families
  /// Leading coefficient of the descent polynomial exceeds its t^1
  /// coefficient, so it cannot be an h*-polynomial.
  std::optional<bool> top_exceeds_first;

  const Route& route(std::string_view name) const;
  Json to_json() const;
};

std::string digest(const TruncatedSeries& s);

/// Routes: carlitz, closedForm (prod of q-binomials), lattice (simplices).
VerificationReport verify_theorem_A(const Composition& eta, int K, unsigned threads = 1);
/// Routes: carlitz, closedForm, lattice (cross polytopes), barred.
VerificationReport verify_theorem_B(const Composition& eta, int K, unsigned threads = 1);
/// Routes: carlitz over B_(1,...,1), closedForm ([k+1]_q + [k]_q)^n, lattice.
VerificationReport verify_cor_hypercube(int n, int K, unsigned threads = 1);
/// At q = 1. Routes: descent (d(t)/(1-t)^{n+1}), barred, ehrhart (product of
/// interpolated block polynomials), lattice (direct counts). With a part > 2
/// the descent side and the geometric side may disagree; that is reported as
/// mismatch-expected as long as each side agrees internally.
VerificationReport verify_coloured(const Composition& eta, int colours, int K, unsigned threads = 1);
/// Routes: descent, closedForm prod (c_i k + 1), lattice.
VerificationReport verify_c_coloured(const std::vector<int>& palette, int K, unsigned threads = 1);

/// prod_{i=0}^{n-1} (1 + q^i t)
BivariatePoly cross_polytope_numerator(int n);

struct HStarReport {
  std::vector<Integer> coefficients;
  bool palindromic = false;
  std::optional<int> gorenstein_index;
  bool unimodal = false;
  bool real_rooted = false;
  int real_root_count = 0;

  Json to_json() const;
};

/// p must be nonzero with nonnegative coefficients; n is the ambient
/// dimension used for the Gorenstein index n + 1 - deg p.
HStarReport hstar_report(const IntPoly& p, int n);

bool is_palindromic(const IntPoly& p);
bool is_unimodal(const IntPoly& p);

/// h*-polynomial (q = 1) of a product polytope.
IntPoly hstar_polynomial(const PolytopeSpec& spec);

struct GorensteinCheck {
  bool gorenstein = false;
  std::optional<int> index;
  /// Every block is Gorenstein and all share one index.
  bool blockwise = false;
  std::optional<int> blockwise_index;
  IntPoly hstar;

  bool consistent() const { return gorenstein == blockwise && index == blockwise_index; }
  Json to_json() const;
};

GorensteinCheck gorenstein_product_check(const PolytopeSpec& spec);

}  // namespace macmahon
