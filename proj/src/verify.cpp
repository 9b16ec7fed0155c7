#include "macmahon/verify.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <map>

#include "macmahon/barred.hpp"
#include "macmahon/ehrhart.hpp"
#include "macmahon/errors.hpp"
#include "macmahon/sturm.hpp"
#include "macmahon/statistics.hpp"
#include "macmahon/weights.hpp"

namespace macmahon {

namespace {

void require_window(int n, int K) {
  if (K < n) throw ContractViolation("truncation order K = " + std::to_string(K) + " is below n = " + std::to_string(n));
}

Route make_route(std::string name, TruncatedSeries s) {
  std::string d = digest(s);
  return Route{std::move(name), std::move(s), std::move(d)};
}

TruncatedSeries from_integers(const std::vector<Integer>& values) {
  std::vector<QPoly> c;
  c.reserve(values.size());
  for (const auto& v : values) c.push_back(QPoly::constant(v));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries at_q_one(const TruncatedSeries& s) { return from_integers(s.at_q_one()); }

std::optional<Mismatch> first_difference(const std::vector<Route>& routes) {
  std::optional<Mismatch> best;
  const Route& ref = routes.front();
  for (std::size_t r = 1; r < routes.size(); ++r) {
    const Route& other = routes[r];
    for (int k = 0; k <= ref.series.order(); ++k) {
      if (best && k >= best->k) break;
      if (ref.series[k] != other.series[k]) {
        best = Mismatch{k, ref.name, other.name, ref.series[k], other.series[k]};
        break;
      }
    }
  }
  return best;
}

void settle(VerificationReport& report) {
  report.first_mismatch = first_difference(report.routes);
  report.verdict = report.first_mismatch ? Verdict::fail : Verdict::pass;
}

std::vector<int> parts_of(const Composition& eta) { return {eta.parts().begin(), eta.parts().end()}; }

Composition ones(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

}  // namespace

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::theorem_a:
      return "theoremA";
    case Identity::theorem_b:
      return "theoremB";
    case Identity::hypercube:
      return "hypercube";
    case Identity::coloured:
      return "coloured";
    case Identity::c_coloured:
      return "ccoloured";
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (Identity id : {Identity::theorem_a, Identity::theorem_b, Identity::hypercube, Identity::coloured, Identity::c_coloured})
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::mismatch_expected:
      return "mismatch-expected";
  }
  return "?";
}

std::string digest(const TruncatedSeries& s) {
  std::string text = to_json(s).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) throw InternalDefect("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xF];
  }
  return out;
}

const Route& VerificationReport::route(std::string_view name) const {
  for (const auto& r : routes)
    if (r.name == name) return r;
  throw ContractViolation("report has no route named '" + std::string(name) + "'");
}

Json VerificationReport::to_json() const {
  Json j;
  j["identity"] = identity_name(identity);
  j[identity == Identity::c_coloured ? "palette" : "eta"] = eta;
  if (identity == Identity::coloured) j["c"] = colours;
  j["K"] = K;
  j["verdict"] = verdict_name(verdict);
  Json r = Json::object();
  for (const auto& route : routes) r[route.name] = route.digest;
  j["routes"] = std::move(r);
  if (first_mismatch) {
    j["firstMismatch"] = Json{{"k", first_mismatch->k},
                              {"expectedRoute", first_mismatch->expected_route},
                              {"actualRoute", first_mismatch->actual_route},
                              {"expected", macmahon::to_json(first_mismatch->expected, "q")},
                              {"actual", macmahon::to_json(first_mismatch->actual, "q")}};
  }
  if (numerator) j["numerator"] = macmahon::to_json(*numerator);
  if (descent_polynomial) j["descentPolynomial"] = macmahon::to_json(*descent_polynomial, "t");
  if (top_exceeds_first) j["topExceedsFirst"] = *top_exceeds_first;
  return j;
}

VerificationReport verify_theorem_A(const Composition& eta, int K, unsigned threads) {
  const int n = eta.size();
  require_window(n, K);
  VerificationReport report;
  report.identity = Identity::theorem_a;
  report.eta = parts_of(eta);
  report.K = K;
  BivariatePoly carlitz = carlitz_poly(TypeA{eta}, threads);
  report.routes.push_back(make_route("carlitz", series_from_rational(carlitz, n, K)));
  report.routes.push_back(make_route("closedForm", TruncatedSeries::generate(K, [&](int k) {
                                       QPoly p = QPoly::constant(1);
                                       for (int m : eta.parts()) p = p * q_binomial(k + m, m);
                                       return p;
                                     })));
  report.routes.push_back(make_route("lattice", weighted_series(PolytopeSpec::simplices(eta), K)));
  report.numerator = std::move(carlitz);
  settle(report);
  return report;
}

VerificationReport verify_theorem_B(const Composition& eta, int K, unsigned threads) {
  const int n = eta.size();
  require_window(n, K);
  VerificationReport report;
  report.identity = Identity::theorem_b;
  report.eta = parts_of(eta);
  report.K = K;
  BivariatePoly carlitz = carlitz_poly(TypeB{eta}, threads);
  report.routes.push_back(make_route("carlitz", series_from_rational(carlitz, n, K)));
  report.routes.push_back(make_route("closedForm", TruncatedSeries::generate(K, [&](int k) { return closed_form_coeff(eta, k); })));
  report.routes.push_back(make_route("lattice", weighted_series(PolytopeSpec::cross_polytopes(eta), K)));
  report.routes.push_back(make_route("barred", oracle_series(TypeB{eta}, K, threads)));
  report.numerator = std::move(carlitz);
  settle(report);
  return report;
}

VerificationReport verify_cor_hypercube(int n, int K, unsigned threads) {
  if (n < 1) throw ContractViolation("hypercube dimension must be positive");
  require_window(n, K);
  Composition eta = ones(n);
  VerificationReport report;
  report.identity = Identity::hypercube;
  report.eta = parts_of(eta);
  report.K = K;
  BivariatePoly carlitz = carlitz_poly(TypeB{eta}, threads);
  report.routes.push_back(make_route("carlitz", series_from_rational(carlitz, n, K)));
  report.routes.push_back(make_route("closedForm", TruncatedSeries::generate(K, [&](int k) {
                                       return (q_int(k + 1) + q_int(k)).pow(static_cast<unsigned>(n));
                                     })));
  report.routes.push_back(make_route("lattice", weighted_series(PolytopeSpec::cross_polytopes(eta), K)));
  report.numerator = std::move(carlitz);
  settle(report);
  return report;
}

VerificationReport verify_coloured(const Composition& eta, int colours, int K, unsigned threads) {
  const int n = eta.size();
  require_window(n, K);
  if (colours < 1) throw ContractViolation("colour count must be positive");
  Coloured family{eta, colours};
  VerificationReport report;
  report.identity = Identity::coloured;
  report.eta = parts_of(eta);
  report.colours = colours;
  report.K = K;

  IntPoly d = descent_poly(family, threads);
  report.routes.push_back(make_route("descent", series_from_rational_q1(d, n, K)));
  report.routes.push_back(make_route("barred", at_q_one(oracle_series(family, K, threads))));

  std::map<int, EhrhartPolynomial> block_poly;
  for (int m : eta.parts())
    if (!block_poly.count(m)) block_poly.emplace(m, interpolate_ehrhart(Block{BlockKind::distorted_cross, m, colours}));
  std::vector<Integer> ehr(static_cast<std::size_t>(K) + 1), lattice(static_cast<std::size_t>(K) + 1);
  PolytopeSpec spec = PolytopeSpec::distorted(eta, colours);
  for (int k = 0; k <= K; ++k) {
    Rational v(1);
    for (int m : eta.parts()) v *= block_poly.at(m).evaluate(k);
    if (v.get_den() != 1) throw InternalDefect("Ehrhart polynomial took a non-integer value");
    ehr[static_cast<std::size_t>(k)] = v.get_num();
    lattice[static_cast<std::size_t>(k)] = count_points(spec, k);
  }
  report.routes.push_back(make_route("ehrhart", from_integers(ehr)));
  report.routes.push_back(make_route("lattice", from_integers(lattice)));

  report.top_exceeds_first = d.leading() > d.coeff(1);
  report.descent_polynomial = std::move(d);
  settle(report);
  if (report.verdict == Verdict::fail && eta.max_part() > 2) {
    const auto& r = report.routes;
    bool permutation_side = r[0].series == r[1].series;
    bool geometric_side = r[2].series == r[3].series;
    if (permutation_side && geometric_side) report.verdict = Verdict::mismatch_expected;
  }
  return report;
}

VerificationReport verify_c_coloured(const std::vector<int>& palette, int K, unsigned threads) {
  CColoured family{palette};
  validate(family);
  const int n = static_cast<int>(palette.size());
  require_window(n, K);
  VerificationReport report;
  report.identity = Identity::c_coloured;
  report.eta = palette;
  report.K = K;

  IntPoly d = descent_poly(family, threads);
  report.routes.push_back(make_route("descent", series_from_rational_q1(d, n, K)));
  report.routes.push_back(make_route("closedForm", TruncatedSeries::generate(K, [&](int k) {
                                       Integer v = 1;
                                       for (int c : palette) v *= Integer(c) * k + 1;
                                       return QPoly::constant(v);
                                     })));
  std::vector<Block> blocks;
  for (int c : palette) blocks.push_back(Block{BlockKind::distorted_cross, 1, c});
  PolytopeSpec spec(std::move(blocks));
  std::vector<Integer> lattice;
  for (int k = 0; k <= K; ++k) lattice.push_back(count_points(spec, k));
  report.routes.push_back(make_route("lattice", from_integers(lattice)));
  report.descent_polynomial = std::move(d);
  settle(report);
  return report;
}

BivariatePoly cross_polytope_numerator(int n) {
  BivariatePoly p;
  p.add_term(0, 0, 1);
  for (int i = 0; i < n; ++i) {
    BivariatePoly f;
    f.add_term(0, 0, 1);
    f.add_term(i, 1, 1);
    p = p * f;
  }
  return p;
}

bool is_palindromic(const IntPoly& p) {
  auto c = p.coefficients();
  for (std::size_t i = 0, j = c.size(); i < j--; ++i)
    if (c[i] != c[j]) return false;
  return true;
}

bool is_unimodal(const IntPoly& p) {
  auto c = p.coefficients();
  std::size_t i = 1;
  while (i < c.size() && c[i - 1] <= c[i]) ++i;
  while (i < c.size() && c[i - 1] >= c[i]) ++i;
  return i >= c.size();
}

HStarReport hstar_report(const IntPoly& p, int n) {
  if (p.is_zero()) throw ContractViolation("h* report of the zero polynomial");
  for (const auto& c : p.coefficients())
    if (c < 0) throw ContractViolation("h* report needs nonnegative coefficients");
  HStarReport r;
  r.coefficients.assign(p.coefficients().begin(), p.coefficients().end());
  r.palindromic = is_palindromic(p);
  if (r.palindromic) r.gorenstein_index = n + 1 - p.degree();
  r.unimodal = is_unimodal(p);
  r.real_root_count = count_real_roots(p);
  r.real_rooted = r.real_root_count == p.degree();
  return r;
}

Json HStarReport::to_json() const {
  Json c = Json::array();
  for (const auto& x : coefficients) c.push_back(x.get_str());
  Json j{{"coefficients", std::move(c)}, {"palindromic", palindromic}};
  j["gorensteinIndex"] = gorenstein_index ? Json(*gorenstein_index) : Json(nullptr);
  j["unimodal"] = unimodal;
  j["realRooted"] = real_rooted;
  j["realRootCount"] = real_root_count;
  return j;
}

IntPoly hstar_polynomial(const PolytopeSpec& spec) {
  const int n = spec.dimension();
  const int K = n + 2;
  TruncatedSeries counts(0);
  if (spec.has_distorted_blocks()) {
    std::vector<Integer> v;
    for (int k = 0; k <= K; ++k) v.push_back(count_points(spec, k));
    counts = from_integers(v);
  } else {
    counts = at_q_one(weighted_series(spec, K));
  }
  TruncatedSeries h = mul_by_denominator_q1(counts, n);
  for (int k = n + 1; k <= K; ++k)
    if (!h[k].is_zero()) throw InternalDefect("h* numerator has terms above t^n");
  std::vector<Integer> c;
  for (int k = 0; k <= n; ++k) c.push_back(h[k].coeff(0));
  return IntPoly(std::move(c));
}

GorensteinCheck gorenstein_product_check(const PolytopeSpec& spec) {
  GorensteinCheck g;
  g.hstar = hstar_polynomial(spec);
  if (is_palindromic(g.hstar)) {
    g.gorenstein = true;
    g.index = spec.dimension() + 1 - g.hstar.degree();
  }
  g.blockwise = true;
  for (const auto& b : spec.blocks()) {
    IntPoly h = hstar_polynomial(PolytopeSpec({b}));
    if (!is_palindromic(h)) {
      g.blockwise = false;
      break;
    }
    int idx = b.dim + 1 - h.degree();
    if (g.blockwise_index && *g.blockwise_index != idx) {
      g.blockwise = false;
      break;
    }
    g.blockwise_index = idx;
  }
  if (!g.blockwise) g.blockwise_index.reset();
  return g;
}

Json GorensteinCheck::to_json() const {
  Json j{{"gorenstein", gorenstein}};
  j["index"] = index ? Json(*index) : Json(nullptr);
  j["blockwise"] = blockwise;
  j["blockwiseIndex"] = blockwise_index ? Json(*blockwise_index) : Json(nullptr);
  j["consistent"] = consistent();
  j["hstar"] = macmahon::to_json(hstar, "t");
  return j;
}

}  // namespace macmahon
