#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "macmahon/cli.hpp"
#include "macmahon/ehrhart.hpp"
#include "macmahon/errors.hpp"
#include "macmahon/poly_io.hpp"
#include "macmahon/statistics.hpp"
#include "macmahon/verify.hpp"

namespace py = pybind11;
using namespace macmahon;

namespace {

py::object to_py(const Integer& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return py::module_::import("fractions").attr("Fraction")(to_py(c.get_num()), to_py(c.get_den()));
}

py::list to_py(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

py::dict to_py(const BivariatePoly& p) {
  py::dict out;
  for (const auto& [m, c] : p.terms()) out[py::make_tuple(m.q, m.t)] = to_py(c);
  return out;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Family make_family(const std::string& kind, const std::vector<int>& eta, int colours, const std::vector<int>& palette) {
  if (kind == "A") return TypeA{Composition(eta)};
  if (kind == "B") return TypeB{Composition(eta)};
  if (kind == "coloured") return Coloured{Composition(eta), colours};
  if (kind == "ccoloured") return CColoured{palette};
  throw ContractViolation("unknown family '" + kind + "' (expected A, B, coloured or ccoloured)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Descent statistics on multiset permutations and lattice-point counts of product polytopes.";

  py::register_exception<InternalDefect>(m, "InternalDefect", PyExc_RuntimeError);

  m.def(
      "descent_polynomial",
      [](const std::string& family, const std::vector<int>& eta, int colours, const std::vector<int>& palette, unsigned threads) {
        return to_py(descent_poly(make_family(family, eta, colours, palette), threads));
      },
      py::arg("family"), py::arg("eta") = std::vector<int>{}, py::arg("colours") = 1, py::arg("palette") = std::vector<int>{},
      py::arg("threads") = 1u, "Coefficients of sum t^des over the family, constant term first.");

  m.def(
      "carlitz_polynomial",
      [](const std::string& family, const std::vector<int>& eta, unsigned threads) {
        return to_py(carlitz_poly(make_family(family, eta, 1, {}), threads));
      },
      py::arg("family"), py::arg("eta"), py::arg("threads") = 1u, "{(q_exp, t_exp): count} for sum q^maj t^des.");

  m.def(
      "statistics",
      [](const std::string& family, const std::vector<int>& eta, const std::string& element, int colours, const std::vector<int>& palette) {
        Family f = make_family(family, eta, colours, palette);
        Element e = parse_element(element, f);
        py::dict out;
        out["des"] = des(e);
        out["maj"] = maj(e);
        out["descent_set"] = descent_set(e);
        return out;
      },
      py::arg("family"), py::arg("eta"), py::arg("element"), py::arg("colours") = 1, py::arg("palette") = std::vector<int>{});

  m.def(
      "verify",
      [](const std::string& identity, const std::vector<int>& eta, int n, int colours, const std::vector<int>& palette, int K,
         unsigned threads) {
        auto id = parse_identity(identity);
        if (!id) throw ContractViolation("unknown identity '" + identity + "'");
        VerificationReport r;
        switch (*id) {
          case Identity::theorem_a:
            r = verify_theorem_A(Composition(eta), K, threads);
            break;
          case Identity::theorem_b:
            r = verify_theorem_B(Composition(eta), K, threads);
            break;
          case Identity::hypercube:
            r = verify_cor_hypercube(n, K, threads);
            break;
          case Identity::coloured:
            r = verify_coloured(Composition(eta), colours, K, threads);
            break;
          case Identity::c_coloured:
            r = verify_c_coloured(palette, K, threads);
            break;
        }
        return json_to_py(r.to_json());
      },
      py::arg("identity"), py::arg("eta") = std::vector<int>{}, py::arg("n") = 0, py::arg("colours") = 2,
      py::arg("palette") = std::vector<int>{}, py::arg("K") = 6, py::arg("threads") = 1u,
      "Runs every route of an identity and returns the report as a dict.");

  m.def(
      "ehrhart",
      [](const std::string& spec) {
        auto p = interpolate_ehrhart(PolytopeSpec::parse(spec));
        py::list out;
        for (const auto& c : p.coefficients()) out.append(to_py(c));
        return out;
      },
      py::arg("spec"), "Ehrhart polynomial coefficients (Fractions, constant term first) of e.g. 'simplex:2,dcross:2:3'.");

  m.def(
      "count_points", [](const std::string& spec, long k, bool open) { return to_py(count_points(PolytopeSpec::parse(spec), k, open)); },
      py::arg("spec"), py::arg("k"), py::arg("open") = false);

  m.def(
      "hstar", [](const std::string& spec) { return to_py(hstar_polynomial(PolytopeSpec::parse(spec))); }, py::arg("spec"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"macmahon"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
