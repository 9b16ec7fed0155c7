#include "macmahon/poly_io.hpp"

#include <vector>

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

Integer parse_coeff(const Json& j) {
  Integer z;
  if (j.is_string()) {
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ContractViolation("polynomial JSON: bad coefficient");
  } else if (j.is_number_integer()) {
    z = Integer(j.get<long>());
  } else {
    throw ContractViolation("polynomial JSON: coefficient must be a decimal string");
  }
  return z;
}

std::string power(std::string_view var, int e, TextStyle style) {
  std::string s(var);
  if (e == 1) return s;
  s += '^';
  if (style == TextStyle::latex && e >= 10)
    s += "{" + std::to_string(e) + "}";
  else
    s += std::to_string(e);
  return s;
}

// Signed terms (coefficient, rendered monomial) joined as "a + b - c".
std::string join_terms(const std::vector<std::pair<Integer, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    Integer a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + " " + mono;
  }
  return out;
}

}  // namespace

Json to_json(const BivariatePoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({m.q, m.t, c.get_str()}));
  return Json{{"vars", Json::array({"q", "t"})}, {"terms", std::move(terms)}};
}

Json to_json(const IntPoly& p, std::string_view var) {
  Json terms = Json::array();
  auto cs = p.coefficients();
  for (std::size_t e = 0; e < cs.size(); ++e)
    if (cs[e] != 0) terms.push_back(Json::array({static_cast<int>(e), cs[e].get_str()}));
  return Json{{"vars", Json::array({std::string(var)})}, {"terms", std::move(terms)}};
}

Json to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_json(c, "q"));
  return out;
}

BivariatePoly bivariate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw ContractViolation("polynomial JSON: expected an object with vars and terms");
  if (j["vars"] != Json::array({"q", "t"})) throw ContractViolation("polynomial JSON: vars must be [\"q\",\"t\"]");
  BivariatePoly p;
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 3) throw ContractViolation("polynomial JSON: bivariate term needs 3 entries");
    int qe = term[0].get<int>();
    int te = term[1].get<int>();
    if (qe < 0 || te < 0) throw ContractViolation("polynomial JSON: negative exponent");
    p.add_term(qe, te, parse_coeff(term[2]));
  }
  return p;
}

IntPoly univariate_from_json(const Json& j, std::string* var) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw ContractViolation("polynomial JSON: expected an object with vars and terms");
  const auto& vars = j["vars"];
  if (!vars.is_array() || vars.size() != 1 || !vars[0].is_string())
    throw ContractViolation("polynomial JSON: univariate vars must hold one name");
  if (var != nullptr) *var = vars[0].get<std::string>();
  IntPoly p;
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 2) throw ContractViolation("polynomial JSON: univariate term needs 2 entries");
    int e = term[0].get<int>();
    if (e < 0) throw ContractViolation("polynomial JSON: negative exponent");
    p.add_term(static_cast<std::size_t>(e), parse_coeff(term[1]));
  }
  return p;
}

std::string to_text(const IntPoly& p, std::string_view var, TextStyle style) {
  std::vector<std::pair<Integer, std::string>> terms;
  auto cs = p.coefficients();
  for (int e = p.degree(); e >= 0; --e) {
    const auto& c = cs[static_cast<std::size_t>(e)];
    if (c != 0) terms.emplace_back(c, e == 0 ? std::string() : power(var, e, style));
  }
  return join_terms(terms);
}

std::string to_text(const BivariatePoly& p, TextStyle style) {
  std::vector<std::pair<Integer, std::string>> terms;
  for (int k = p.t_degree(); k >= 0; --k) {
    IntPoly qk = p.t_coefficient(k);
    if (qk.is_zero()) continue;
    std::string tpart = k == 0 ? std::string() : power("t", k, style);
    int nonzero = 0;
    for (const auto& c : qk.coefficients()) nonzero += c != 0 ? 1 : 0;
    if (nonzero == 1) {
      int e = qk.degree();
      std::string mono = e == 0 ? std::string() : power("q", e, style);
      if (!mono.empty() && !tpart.empty()) mono += " ";
      terms.emplace_back(qk.leading(), mono + tpart);
    } else if (tpart.empty()) {
      // the constant term in t is written out without parentheses
      for (int e = qk.degree(); e >= 0; --e) {
        const auto& c = qk.coefficients()[static_cast<std::size_t>(e)];
        if (c != 0) terms.emplace_back(c, e == 0 ? std::string() : power("q", e, style));
      }
    } else {
      terms.emplace_back(Integer(1), "(" + to_text(qk, "q", style) + ") " + tpart);
    }
  }
  return join_terms(terms);
}

}  // namespace macmahon
