#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "macmahon/poly.hpp"
#include "macmahon/series.hpp"

namespace macmahon {

using Json = nlohmann::ordered_json;

// Polynomial JSON:
//   bivariate  {"vars":["q","t"],"terms":[[qExp,tExp,"coeff"],...]}  sorted by (t, q)
//   univariate {"vars":["t"],"terms":[[exp,"coeff"],...]}            sorted by exp
// Coefficients are decimal strings so no precision is lost.
Json to_json(const BivariatePoly& p);
Json to_json(const IntPoly& p, std::string_view var);
/// One univariate q-polynomial per coefficient of t.
Json to_json(const TruncatedSeries& s);

BivariatePoly bivariate_from_json(const Json& j);
/// Throws ContractViolation on malformed input; `var` receives the variable name.
IntPoly univariate_from_json(const Json& j, std::string* var = nullptr);

enum class TextStyle { plain, latex };

/// Descending-degree rendering, e.g. "t^3 + 11 t^2 + 11 t + 1".
std::string to_text(const IntPoly& p, std::string_view var, TextStyle style = TextStyle::plain);

/// Grouped by powers of t, e.g.
/// "q^3 t^3 + (3 q^3 + 5 q^2 + 3 q) t^2 + (3 q^2 + 5 q + 3) t + 1".
std::string to_text(const BivariatePoly& p, TextStyle style = TextStyle::plain);

}  // namespace macmahon
