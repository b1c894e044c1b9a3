#pragma once

#include <json.hpp>

#include <string>

#include "algpencil/algebra.hpp"
#include "algpencil/pencil.hpp"

namespace algpencil {

// ordered_json keeps key order stable so machine reports are byte-reproducible
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Document shape:
// { "dim": n, "basis": [names...], "unity": "name"?,
//   "table": [[ [c...], ... ], ...] }  with table[i][j] the coefficient
// vector of e_i * e_j.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

Algebra load_algebra_file(const std::string& path);
Json load_json_file(const std::string& path);

// bare 2D array or {"matrix": [[...]]}
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

// comma-separated rationals: "1,2,4" or "1/2,-3,0"
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace algpencil
