#include "algpencil/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "algpencil/errors.hpp"

namespace algpencil {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorCode::ParseError, what);
}

}  // namespace

Json rational_to_json(const Rational& r) {
    // integers that fit a JSON number stay numbers; everything else is "p/q"
    if (den(r) == 1) {
        static const Int kMax = (Int(1) << 53);
        Int n = num(r);
        if (n < kMax && -n < kMax) return Json(n.convert_to<long long>());
    }
    return Json(rational_str(r));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    parse_fail("expected an integer or a \"p/q\" string, got: " + j.dump());
}

Json algebra_to_json(const Algebra& a) {
    Json doc;
    doc["dim"] = a.dim();
    doc["basis"] = a.basis_names();
    if (a.unity_index()) doc["unity"] = a.basis_names()[*a.unity_index()];
    Json table = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Json cell = Json::array();
            for (std::size_t k = 0; k < a.dim(); ++k)
                cell.push_back(rational_to_json(a.structure(i, j, k)));
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    doc["table"] = std::move(table);
    return doc;
}

Algebra algebra_from_json(const Json& j) {
    if (!j.is_object()) parse_fail("algebra document must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        parse_fail("missing or non-integer \"dim\"");
    const long long dim_ll = j["dim"].get<long long>();
    if (dim_ll < 1 || dim_ll > 64) parse_fail("\"dim\" out of range [1,64]");
    const std::size_t n = static_cast<std::size_t>(dim_ll);

    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != n)
        parse_fail("\"basis\" must be an array of dim names");
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& b : j["basis"]) {
        if (!b.is_string()) parse_fail("basis names must be strings");
        names.push_back(b.get<std::string>());
        if (!seen.insert(names.back()).second)
            parse_fail("duplicate basis name: " + names.back());
    }

    if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != n)
        parse_fail("\"table\" must be a dim x dim x dim array");
    std::vector<Rational> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = j["table"][i];
        if (!row.is_array() || row.size() != n)
            parse_fail("table row " + std::to_string(i) + " must have dim cells");
        for (std::size_t jj = 0; jj < n; ++jj) {
            const Json& cell = row[jj];
            if (!cell.is_array() || cell.size() != n)
                parse_fail("table cell (" + std::to_string(i) + "," + std::to_string(jj) +
                           ") must be a length-dim coefficient vector");
            for (std::size_t k = 0; k < n; ++k)
                table[(i * n + jj) * n + k] = rational_from_json(cell[k]);
        }
    }

    std::optional<std::size_t> unity;
    if (j.contains("unity")) {
        if (!j["unity"].is_string()) parse_fail("\"unity\" must be a basis name");
        auto it = std::find(names.begin(), names.end(), j["unity"].get<std::string>());
        if (it == names.end())
            parse_fail("unity name not in basis: " + j["unity"].get<std::string>());
        unity = static_cast<std::size_t>(it - names.begin());
    }
    Algebra a(std::move(names), std::move(table), unity);
    if (unity) {
        // the marked unity must really be a two-sided unity
        for (std::size_t i = 0; i < n; ++i) {
            if (!(a.product_of_basis(*unity, i) == a.basis_element(i)) ||
                !(a.product_of_basis(i, *unity) == a.basis_element(i)))
                parse_fail("marked unity is not a two-sided unity");
        }
    }
    return a;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        parse_fail("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

Algebra load_algebra_file(const std::string& path) {
    return algebra_from_json(load_json_file(path));
}

Matrix matrix_from_json(const Json& j) {
    const Json* rows = &j;
    if (j.is_object()) {
        if (!j.contains("matrix")) parse_fail("matrix document needs a \"matrix\" key");
        rows = &j["matrix"];
    }
    if (!rows->is_array() || rows->empty()) parse_fail("matrix must be a non-empty 2D array");
    const std::size_t r = rows->size();
    const Json& first = (*rows)[0];
    if (!first.is_array() || first.empty()) parse_fail("matrix rows must be non-empty arrays");
    const std::size_t c = first.size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const Json& row = (*rows)[i];
        if (!row.is_array() || row.size() != c) parse_fail("ragged matrix rows");
        for (std::size_t jj = 0; jj < c; ++jj) m.at(i, jj) = rational_from_json(row[jj]);
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // trim spaces
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) parse_fail("empty entry in rational list");
        out.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    if (out.empty()) parse_fail("empty rational list");
    return out;
}

}  // namespace algpencil
