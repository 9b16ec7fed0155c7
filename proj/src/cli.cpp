#include "macmahon/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <thread>

#include "macmahon/barred.hpp"
#include "macmahon/ehrhart.hpp"
#include "macmahon/errors.hpp"
#include "macmahon/poly_io.hpp"
#include "macmahon/statistics.hpp"
#include "macmahon/verify.hpp"
#include "macmahon/weights.hpp"

namespace macmahon {

namespace {

enum class Format { json, latex, csv, plain };

struct Globals {
  Format format = Format::plain;
  int K = -1;
  unsigned threads = 1;
};

struct FamilyArgs {
  std::string family = "A";
  std::string eta;
  int colours = 2;
  std::string palette;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int x = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw ContractViolation(std::string("cannot parse ") + what + " '" + text + "'");
    }
  }
  if (v.empty()) throw ContractViolation(std::string("empty ") + what);
  return v;
}

Composition require_eta(const std::string& eta) {
  if (eta.empty()) throw ContractViolation("--eta is required");
  return Composition::parse(eta);
}

Family make_family(const FamilyArgs& a) {
  if (a.family == "A") return TypeA{require_eta(a.eta)};
  if (a.family == "B") return TypeB{require_eta(a.eta)};
  if (a.family == "coloured") {
    Family f = Coloured{require_eta(a.eta), a.colours};
    validate(f);
    return f;
  }
  if (a.family == "ccoloured") {
    if (a.palette.empty()) throw ContractViolation("--palette is required for the ccoloured family");
    Family f = CColoured{parse_int_list(a.palette, "palette")};
    validate(f);
    return f;
  }
  throw ContractViolation("unknown family '" + a.family + "' (expected A, B, coloured or ccoloured)");
}

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family, "A, B, coloured or ccoloured")->capture_default_str();
  cmd->add_option("--eta", a.eta, "composition, e.g. 1,2,2");
  cmd->add_option("-c,--colours", a.colours, "number of colours (coloured family)")->capture_default_str();
  cmd->add_option("--palette", a.palette, "per-letter colour counts (ccoloured family), e.g. 2,3");
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

TextStyle style_of(Format f) { return f == Format::latex ? TextStyle::latex : TextStyle::plain; }

int resolve_K(const Globals& g, int n) {
  int K = g.K < 0 ? n + 4 : g.K;
  if (K < n) throw ContractViolation("-K must be at least n = " + std::to_string(n));
  return K;
}

void write_bivariate_csv(std::ostream& out, const BivariatePoly& p) {
  out << "q_exp,t_exp,coeff\n";
  for (const auto& [m, c] : p.terms()) out << m.q << ',' << m.t << ',' << c.get_str() << '\n';
}

void write_univariate_csv(std::ostream& out, const IntPoly& p, const char* var) {
  out << var << "_exp,coeff\n";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    if (p.coefficients()[i] != 0) out << i << ',' << p.coefficients()[i].get_str() << '\n';
}

// ---- stats ----------------------------------------------------------------

int cmd_stats(const Globals& g, const FamilyArgs& fa, const std::vector<std::string>& tokens, std::ostream& out) {
  Family family = make_family(fa);
  std::string text;
  for (const auto& t : tokens) text += (text.empty() ? "" : " ") + t;
  if (text.empty()) throw ContractViolation("stats needs an element, e.g. stats --family B --eta 2,3 -- \"-2 -2 1 2 -1\"");
  Element e = parse_element(text, family);
  std::vector<int> dset = descent_set(e);
  int m = maj(e), d = des(e);
  switch (g.format) {
    case Format::json: {
      Json j{{"family", describe(family)}, {"element", render(e)}, {"Des", dset}, {"maj", m}, {"des", d}};
      if (auto* w = std::get_if<Word>(&e)) j["inv"] = inv(*w);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      std::string ds;
      for (std::size_t i = 0; i < dset.size(); ++i) ds += (i ? " " : "") + std::to_string(dset[i]);
      out << "element,Des,maj,des\n" << render(e) << ',' << ds << ',' << m << ',' << d << '\n';
      break;
    }
    case Format::latex: {
      std::string ds;
      for (std::size_t i = 0; i < dset.size(); ++i) ds += (i ? "," : "") + std::to_string(dset[i]);
      out << "$\\mathrm{Des} = \\{" << ds << "\\}$, $\\mathrm{maj} = " << m << "$, $\\mathrm{des} = " << d << "$\n";
      break;
    }
    case Format::plain:
      out << "Des=" << set_text(dset) << " maj=" << m << " des=" << d << '\n';
      break;
  }
  return kExitOk;
}

// ---- poly -----------------------------------------------------------------

int cmd_poly(const Globals& g, const std::string& kind, const FamilyArgs& fa, std::ostream& out) {
  Family family = make_family(fa);
  if (kind == "carlitz") {
    BivariatePoly p = carlitz_poly(family, g.threads);
    switch (g.format) {
      case Format::json:
        out << Json{{"kind", kind}, {"family", describe(family)}, {"polynomial", to_json(p)}}.dump(2) << '\n';
        break;
      case Format::csv:
        write_bivariate_csv(out, p);
        break;
      default:
        out << to_text(p, style_of(g.format)) << '\n';
    }
    return kExitOk;
  }
  if (kind == "descent") {
    IntPoly p = descent_poly(family, g.threads);
    switch (g.format) {
      case Format::json:
        out << Json{{"kind", kind}, {"family", describe(family)}, {"polynomial", to_json(p, "t")}}.dump(2) << '\n';
        break;
      case Format::csv:
        write_univariate_csv(out, p, "t");
        break;
      default:
        out << to_text(p, "t", style_of(g.format)) << '\n';
    }
    return kExitOk;
  }
  throw ContractViolation("unknown polynomial kind '" + kind + "' (expected descent or carlitz)");
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  std::string eta;
  int n = 0;
  int colours = 2;
  std::string palette;
};

void write_report(const Globals& g, const VerificationReport& r, std::ostream& out) {
  if (g.format == Format::json) {
    out << r.to_json().dump(2) << '\n';
    return;
  }
  if (g.format == Format::csv) {
    out << "route,digest\n";
    for (const auto& route : r.routes) out << route.name << ',' << route.digest << '\n';
    out << "verdict," << verdict_name(r.verdict) << '\n';
    return;
  }
  const TextStyle style = style_of(g.format);
  const std::string comment = g.format == Format::latex ? "% " : "";
  std::string params = identity_name(r.identity) + (r.identity == Identity::c_coloured ? " palette=" : " eta=");
  for (std::size_t i = 0; i < r.eta.size(); ++i) params += (i ? "," : "") + std::to_string(r.eta[i]);
  if (r.identity == Identity::coloured) params += " c=" + std::to_string(r.colours);
  out << comment << params << " K=" << r.K << ": " << verdict_name(r.verdict) << '\n';
  for (const auto& route : r.routes) out << comment << "  " << route.name << ' ' << route.digest << '\n';
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    out << comment << "first mismatch at t^" << m.k << ": " << m.expected_route << " = " << to_text(m.expected, "q") << ", "
        << m.actual_route << " = " << to_text(m.actual, "q") << '\n';
  }
  if (r.numerator) out << comment << "numerator: " << to_text(*r.numerator, style) << '\n';
  if (r.descent_polynomial) out << comment << "descent polynomial: " << to_text(*r.descent_polynomial, "t", style) << '\n';
  if (r.top_exceeds_first && *r.top_exceeds_first) {
    const IntPoly& d = *r.descent_polynomial;
    out << comment << "leading coefficient " << d.leading().get_str() << " exceeds linear coefficient " << d.coeff(1).get_str()
        << "; not an h*-polynomial\n";
  }
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  auto id = parse_identity(a.identity);
  if (!id) throw ContractViolation("unknown identity '" + a.identity + "' (expected theoremA, theoremB, hypercube, coloured or ccoloured)");
  VerificationReport r;
  switch (*id) {
    case Identity::theorem_a: {
      Composition eta = require_eta(a.eta);
      r = verify_theorem_A(eta, resolve_K(g, eta.size()), g.threads);
      break;
    }
    case Identity::theorem_b: {
      Composition eta = require_eta(a.eta);
      r = verify_theorem_B(eta, resolve_K(g, eta.size()), g.threads);
      break;
    }
    case Identity::hypercube: {
      int n = a.n;
      if (n == 0 && !a.eta.empty()) n = require_eta(a.eta).size();
      if (n < 1) throw ContractViolation("hypercube needs -n N with N >= 1");
      r = verify_cor_hypercube(n, resolve_K(g, n), g.threads);
      break;
    }
    case Identity::coloured: {
      Composition eta = require_eta(a.eta);
      r = verify_coloured(eta, a.colours, resolve_K(g, eta.size()), g.threads);
      break;
    }
    case Identity::c_coloured: {
      if (a.palette.empty()) throw ContractViolation("ccoloured needs --palette");
      std::vector<int> palette = parse_int_list(a.palette, "palette");
      r = verify_c_coloured(palette, resolve_K(g, static_cast<int>(palette.size())), g.threads);
      break;
    }
  }
  write_report(g, r, out);
  return r.verdict == Verdict::fail ? kExitVerificationFailed : kExitOk;
}

// ---- ehrhart / hstar ------------------------------------------------------

struct SpecArgs {
  std::string spec;
  std::string spec_json;
  bool weighted = false;
};

PolytopeSpec make_spec(const SpecArgs& a) {
  if (!a.spec.empty() && !a.spec_json.empty()) throw ContractViolation("give either --spec or --spec-json, not both");
  if (!a.spec.empty()) return PolytopeSpec::parse(a.spec);
  if (!a.spec_json.empty()) {
    Json j;
    try {
      j = Json::parse(a.spec_json);
    } catch (const Json::exception& e) {
      throw ContractViolation(std::string("invalid polytope JSON: ") + e.what());
    }
    return PolytopeSpec::from_json(j);
  }
  throw ContractViolation("--spec or --spec-json is required");
}

int cmd_ehrhart(const Globals& g, const SpecArgs& a, std::ostream& out) {
  PolytopeSpec spec = make_spec(a);
  const int n = spec.dimension();
  const int K = g.K < 0 ? n + 4 : g.K;
  if (K < 0) throw ContractViolation("-K must be nonnegative");
  EhrhartPolynomial p = interpolate_ehrhart(spec);
  std::vector<Integer> closed, open;
  for (int k = 0; k <= K; ++k) {
    closed.push_back(count_points(spec, k));
    open.push_back(count_points(spec, k, true));
  }
  const bool reciprocity = reciprocity_check(spec, std::max(K, 1));
  std::optional<TruncatedSeries> weighted;
  if (a.weighted) weighted = weighted_series(spec, K);

  switch (g.format) {
    case Format::json: {
      Json counts = Json::array(), interior = Json::array();
      for (int k = 0; k <= K; ++k) {
        counts.push_back(closed[static_cast<std::size_t>(k)].get_str());
        interior.push_back(open[static_cast<std::size_t>(k)].get_str());
      }
      Json j{{"spec", spec.to_string()},
             {"dimension", n},
             {"polynomial", p.to_json()},
             {"text", p.to_string()},
             {"leadingCoefficient", to_string(p.coeff(p.degree()))},
             {"counts", std::move(counts)},
             {"interiorCounts", std::move(interior)},
             {"reciprocity", reciprocity}};
      if (weighted) j["weightedSeries"] = to_json(*weighted);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "k,count,interior";
      if (weighted) out << ",weighted";
      out << '\n';
      for (int k = 0; k <= K; ++k) {
        out << k << ',' << closed[static_cast<std::size_t>(k)].get_str() << ',' << open[static_cast<std::size_t>(k)].get_str();
        if (weighted) out << ",\"" << to_text((*weighted)[k], "q") << '"';
        out << '\n';
      }
      break;
    default: {
      const bool latex = g.format == Format::latex;
      out << (latex ? "% " : "") << spec.to_string() << '\n';
      out << (latex ? "$L(k) = " : "L(k) = ") << p.to_string() << (latex ? "$" : "") << '\n';
      if (latex) break;
      out << "counts:";
      for (const auto& c : closed) out << ' ' << c.get_str();
      out << "\ninterior:";
      for (const auto& c : open) out << ' ' << c.get_str();
      out << "\nreciprocity: " << (reciprocity ? "holds" : "fails") << '\n';
      if (weighted)
        for (int k = 0; k <= K; ++k) out << "t^" << k << ": " << to_text((*weighted)[k], "q") << '\n';
    }
  }
  return kExitOk;
}

int cmd_hstar(const Globals& g, const SpecArgs& sa, const FamilyArgs& fa, bool family_given, std::ostream& out) {
  IntPoly h;
  int n = 0;
  std::optional<GorensteinCheck> gorenstein;
  std::string subject;
  if (family_given) {
    Family family = make_family(fa);
    h = descent_poly(family, g.threads);
    n = word_length(family);
    subject = describe(family);
  } else {
    PolytopeSpec spec = make_spec(sa);
    n = spec.dimension();
    subject = spec.to_string();
    if (spec.has_distorted_blocks()) {
      h = hstar_polynomial(spec);
    } else {
      gorenstein = gorenstein_product_check(spec);
      h = gorenstein->hstar;
    }
  }
  HStarReport r = hstar_report(h, n);
  switch (g.format) {
    case Format::json: {
      Json j{{"subject", subject}, {"dimension", n}, {"polynomial", to_json(h, "t")}, {"report", r.to_json()}};
      if (gorenstein) j["product"] = gorenstein->to_json();
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "palindromic,gorenstein_index,unimodal,real_rooted,real_root_count\n"
          << r.palindromic << ',' << (r.gorenstein_index ? std::to_string(*r.gorenstein_index) : "") << ',' << r.unimodal << ','
          << r.real_rooted << ',' << r.real_root_count << '\n';
      break;
    default: {
      const bool latex = g.format == Format::latex;
      const std::string c = latex ? "% " : "";
      out << (latex ? "$h^*(t) = " : "h*(t) = ") << to_text(h, "t", style_of(g.format)) << (latex ? "$" : "") << '\n';
      out << c << "palindromic: " << (r.palindromic ? "yes" : "no");
      if (r.gorenstein_index) out << " (Gorenstein index " << *r.gorenstein_index << ")";
      out << '\n' << c << "unimodal: " << (r.unimodal ? "yes" : "no") << '\n';
      out << c << "real-rooted: " << (r.real_rooted ? "yes" : "no") << " (" << r.real_root_count << " of " << h.degree()
          << " roots real)\n";
      if (gorenstein)
        out << c << "blockwise criterion: " << (gorenstein->blockwise ? "all blocks Gorenstein of one index" : "not met")
            << (gorenstein->consistent() ? "" : " (INCONSISTENT)") << '\n';
    }
  }
  return kExitOk;
}

// ---- appendix-table -------------------------------------------------------

int cmd_appendix(const Globals& g, int n_max, std::ostream& out, std::ostream& err) {
  if (n_max < 1) throw ContractViolation("--n-max must be at least 1");
  if (n_max > 8) err << "warning: n-max " << n_max << " is above 8; expect long running times\n";
  struct Row {
    Composition eta;
    IntPoly poly;
  };
  std::vector<std::vector<Row>> table;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Row> rows;
    for (auto& eta : partitions_of(n)) rows.push_back(Row{eta, descent_poly(TypeB{eta}, g.threads)});
    table.push_back(std::move(rows));
  }
  switch (g.format) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& rows : table)
        for (const auto& row : rows) {
          std::vector<int> parts(row.eta.parts().begin(), row.eta.parts().end());
          arr.push_back(Json{{"n", row.eta.size()}, {"eta", parts}, {"polynomial", to_json(row.poly, "t")}});
        }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,eta,polynomial\n";
      for (const auto& rows : table)
        for (const auto& row : rows) out << row.eta.size() << ",\"" << row.eta.to_string() << "\",\"" << to_text(row.poly, "t") << "\"\n";
      break;
    case Format::latex:
      out << "\\begin{longtable}{cc|c}\n\\centering\n$n$ & $\\eta$ & $B_{\\eta}(t)$ \\\\\n \\hline\n";
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (i > 0) out << " & & \\\\\n";
        for (std::size_t j = 0; j < table[i].size(); ++j) {
          const Row& row = table[i][j];
          if (j == 0) out << '$' << row.eta.size() << "$ & ";
          else out << " & ";
          out << '$' << row.eta.to_string() << "$ & $" << to_text(row.poly, "t", TextStyle::latex) << "$ \\\\\n";
        }
      }
      out << "\\end{longtable}\n";
      break;
    case Format::plain:
      for (const auto& rows : table)
        for (const auto& row : rows) out << row.eta.to_string() << ": " << to_text(row.poly, "t") << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Descent statistics, lattice-point enumeration and identity checks", "macmahon"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  g.threads = std::max(1u, std::thread::hardware_concurrency());
  std::map<std::string, Format> formats{{"json", Format::json}, {"latex", Format::latex}, {"csv", Format::csv}, {"plain", Format::plain}};
  app.add_option("--format", g.format, "json, latex, csv or plain")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("FORMAT [plain]");
  app.add_option("-K", g.K, "truncation order (default n + 4)");
  app.add_option("--threads", g.threads, "worker threads for large enumerations")->check(CLI::PositiveNumber);

  FamilyArgs stats_family;
  std::vector<std::string> element_tokens;
  auto* stats = app.add_subcommand("stats", "descent set, maj and des of one element");
  add_family_options(stats, stats_family);
  stats->add_option("element", element_tokens, "element, e.g. \"-2 -2 1 2 -1\" or \"1^2 2^1 2^1\"");

  FamilyArgs poly_family;
  std::string poly_kind;
  auto* poly = app.add_subcommand("poly", "descent or Carlitz polynomial of a family");
  poly->add_option("kind", poly_kind, "descent or carlitz")->required();
  add_family_options(poly, poly_family);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check an identity by several independent routes");
  verify->add_option("identity", va.identity, "theoremA, theoremB, hypercube, coloured or ccoloured")->required();
  verify->add_option("--eta", va.eta, "composition, e.g. 1,2");
  verify->add_option("-n", va.n, "dimension (hypercube)");
  verify->add_option("-c,--colours", va.colours, "number of colours (coloured)")->capture_default_str();
  verify->add_option("--palette", va.palette, "per-letter colour counts (ccoloured)");

  SpecArgs ehrhart_spec;
  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and lattice-point counts of a product polytope");
  ehrhart->add_option("--spec", ehrhart_spec.spec, "e.g. simplex:2,cross:3,dcross:2:5");
  ehrhart->add_option("--spec-json", ehrhart_spec.spec_json, "JSON form {\"blocks\":[...]}");
  ehrhart->add_flag("--weighted", ehrhart_spec.weighted, "also print the q-weighted series (simplex and cross blocks)");

  SpecArgs hstar_spec;
  FamilyArgs hstar_family;
  bool hstar_use_family = false;
  auto* hstar = app.add_subcommand("hstar", "palindromicity, unimodality and real-rootedness of an h*-polynomial");
  hstar->add_option("--spec", hstar_spec.spec, "product polytope");
  hstar->add_option("--spec-json", hstar_spec.spec_json, "JSON form of the polytope");
  auto* fam_opt = hstar->add_option("--family", hstar_family.family, "use the descent polynomial of a family instead");
  hstar->add_option("--eta", hstar_family.eta, "composition");
  hstar->add_option("-c,--colours", hstar_family.colours, "number of colours");
  hstar->add_option("--palette", hstar_family.palette, "per-letter colour counts");

  int n_max = 8;
  auto* appendix = app.add_subcommand("appendix-table", "type B Eulerian polynomials for all partitions up to n-max");
  appendix->add_option("--n-max", n_max, "largest n")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    hstar_use_family = fam_opt->count() > 0;
    if (*stats) return cmd_stats(g, stats_family, element_tokens, out);
    if (*poly) return cmd_poly(g, poly_kind, poly_family, out);
    if (*verify) return cmd_verify(g, va, out);
    if (*ehrhart) return cmd_ehrhart(g, ehrhart_spec, out);
    if (*hstar) return cmd_hstar(g, hstar_spec, hstar_family, hstar_use_family, out);
    if (*appendix) return cmd_appendix(g, n_max, out, err);
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalDefect& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace macmahon
