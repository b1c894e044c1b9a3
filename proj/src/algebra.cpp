#include "algpencil/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

#include "algpencil/errors.hpp"

namespace algpencil {

Element operator+(const Element& a, const Element& b) {
    Element r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Element operator-(const Element& a, const Element& b) {
    Element r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

Element operator*(const Rational& s, const Element& a) {
    Element r = a;
    for (auto& v : r.coords) v *= s;
    return r;
}

Algebra::Algebra(std::vector<std::string> basis_names, std::vector<Rational> table,
                 std::optional<std::size_t> unity)
    : dim_(basis_names.size()), names_(std::move(basis_names)), c_(std::move(table)),
      unity_(unity) {
    if (c_.size() != dim_ * dim_ * dim_)
        throw Error(ErrorCode::DimensionMismatch, "structure constant tensor size mismatch");
    if (unity_ && *unity_ >= dim_)
        throw Error(ErrorCode::DimensionMismatch, "unity index out of range");
}

Element Algebra::basis_element(std::size_t i) const {
    Element e{std::vector<Rational>(dim_)};
    e.coords[i] = 1;
    return e;
}

Element Algebra::product_of_basis(std::size_t i, std::size_t j) const {
    Element e{std::vector<Rational>(dim_)};
    for (std::size_t k = 0; k < dim_; ++k) e.coords[k] = structure(i, j, k);
    return e;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
    if (a.coords.size() != dim_ || b.coords.size() != dim_)
        throw Error(ErrorCode::DimensionMismatch, "element dimension mismatch");
    Element r{std::vector<Rational>(dim_)};
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b.coords[j] == 0) continue;
            Rational f = a.coords[i] * b.coords[j];
            for (std::size_t k = 0; k < dim_; ++k) r.coords[k] += f * structure(i, j, k);
        }
    }
    return r;
}

Element Algebra::commutator(const Element& a, const Element& b) const {
    return multiply(a, b) - multiply(b, a);
}

Algebra Algebra::with_unity(std::size_t index) const {
    Algebra r = *this;
    r.unity_ = index;
    return r;
}

std::string Algebra::element_str(const Element& e) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = e.coords[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = c > 0 ? c : -c;
        if (a != 1) os << rational_str(a) << "*";
        os << names_[k];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::optional<AssociativityViolation> check_associativity(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                Element left = a.multiply(a.product_of_basis(i, j), a.basis_element(k));
                Element right = a.multiply(a.basis_element(i), a.product_of_basis(j, k));
                Element diff = right - left;
                if (!diff.is_zero()) return AssociativityViolation{i, j, k, diff};
            }
    return std::nullopt;
}

namespace {

// Solve x * m = rhs for a row vector x; nullopt when inconsistent. `unique`
// reports whether the solution is the only one.
std::optional<std::vector<Rational>> solve_row_system(const Matrix& m,
                                                      const std::vector<Rational>& rhs,
                                                      bool* unique = nullptr) {
    // transpose to the standard column form m^T x^T = rhs^T, augment and reduce
    const std::size_t vars = m.rows();
    const std::size_t eqs = m.cols();
    Matrix aug(eqs, vars + 1);
    for (std::size_t e = 0; e < eqs; ++e) {
        for (std::size_t v = 0; v < vars; ++v) aug.at(e, v) = m.at(v, e);
        aug.at(e, vars) = rhs[e];
    }
    RrefResult r = rref(aug);
    std::vector<Rational> x(vars);
    std::vector<bool> pivot_var(vars, false);
    for (std::size_t row = 0; row < r.rank; ++row) {
        std::size_t col = r.pivot_cols[row];
        if (col == vars) return std::nullopt;  // 0 = 1 row
        pivot_var[col] = true;
        x[col] = r.reduced.at(row, vars);
    }
    // free variables default to zero
    if (unique) {
        *unique = true;
        for (std::size_t v = 0; v < vars; ++v)
            if (!pivot_var[v]) *unique = false;
    }
    // The particular solution is valid only if free columns do not feed
    // pivot rows; with free vars set to 0 the pivot-row values stand as is.
    return x;
}

}  // namespace

std::optional<Element> find_unity(const Algebra& a) {
    const std::size_t n = a.dim();
    if (n == 0) return std::nullopt;
    // u e_j = e_j and e_j u = e_j for all j: 2n^2 linear conditions on u.
    Matrix sys(n, 2 * n * n);
    std::vector<Rational> rhs(2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                sys.at(i, j * n + k) = a.structure(i, j, k);
                sys.at(i, n * n + j * n + k) = a.structure(j, i, k);
            }
    for (std::size_t j = 0; j < n; ++j) {
        rhs[j * n + j] = 1;
        rhs[n * n + j * n + j] = 1;
    }
    auto sol = solve_row_system(sys, rhs);
    if (!sol) return std::nullopt;
    return Element{*sol};
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
    const std::size_t n = a.dim();
    if (!p.is_square() || p.rows() != n)
        throw Error(ErrorCode::DimensionMismatch, "basis change matrix has wrong size");
    Matrix pinv = [&] {
        try {
            return inverse(p);
        } catch (const Error&) {
            throw Error(ErrorCode::SingularMatrix, "basis change matrix is singular");
        }
    }();

    std::vector<Rational> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // f_i f_j in old coordinates
            Element fi{p.row(i)}, fj{p.row(j)};
            Element prod = a.multiply(fi, fj);
            std::vector<Rational> newcoords = row_times(prod.coords, pinv);
            for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = newcoords[k];
        }

    std::optional<std::size_t> unity;
    if (a.unity_index()) {
        std::vector<Rational> u(n);
        u[*a.unity_index()] = 1;
        std::vector<Rational> nu = row_times(u, pinv);
        // keep the marking only if the unity is still a basis vector
        for (std::size_t k = 0; k < n; ++k) {
            if (nu[k] == 1) {
                bool others_zero = true;
                for (std::size_t m = 0; m < n; ++m)
                    if (m != k && nu[m] != 0) others_zero = false;
                if (others_zero) unity = k;
                break;
            }
        }
    }
    return Algebra(a.basis_names(), std::move(table), unity);
}

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& w) {
    if (u.ambient() != a.dim() || w.ambient() != a.dim())
        throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension mismatch");
    if (u.is_zero() || w.is_zero()) return Subspace::zero(a.dim());
    Matrix gens(u.dim() * w.dim(), a.dim());
    std::size_t r = 0;
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            gens.set_row(r++, a.multiply(Element{u.basis_row(i)}, Element{w.basis_row(j)}).coords);
    return Subspace::span(gens, a.dim());
}

namespace {

Subspace bracket_span(const Algebra& a, const Subspace& s) {
    if (s.is_zero()) return Subspace::zero(a.dim());
    Matrix gens(s.dim() * s.dim(), a.dim());
    std::size_t r = 0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            gens.set_row(r++,
                         a.commutator(Element{s.basis_row(i)}, Element{s.basis_row(j)}).coords);
    return Subspace::span(gens, a.dim());
}

}  // namespace

SolvabilityResult is_solvable(const Algebra& a, const Subspace& s) {
    // closure check
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Element br = a.commutator(Element{s.basis_row(i)}, Element{s.basis_row(j)});
            if (!s.contains(br.coords))
                throw Error(ErrorCode::NotBracketClosed,
                            "subspace is not closed under the commutator");
        }
    SolvabilityResult out;
    out.derived_series.push_back(s);
    while (true) {
        const Subspace& cur = out.derived_series.back();
        Subspace next = bracket_span(a, cur);
        if (next == cur) break;
        out.derived_series.push_back(next);
        if (next.is_zero()) break;
    }
    out.solvable = out.derived_series.back().is_zero();
    return out;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace {

Algebra make_algebra(std::vector<std::string> names,
                     const std::vector<std::tuple<std::size_t, std::size_t, Element>>& products,
                     std::optional<std::size_t> unity) {
    const std::size_t n = names.size();
    std::vector<Rational> table(n * n * n);
    for (const auto& [i, j, e] : products)
        for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = e.coords[k];
    return Algebra(std::move(names), std::move(table), unity);
}

Element coords(std::initializer_list<Rational> v) { return Element{std::vector<Rational>(v)}; }

Algebra make_zero(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    return Algebra(std::move(names), std::vector<Rational>(n * n * n));
}

Algebra make_full_matrix(std::size_t n) {
    // basis E_{rc} in row-major order, E_{ab} E_{cd} = delta_{bc} E_{ad}
    const std::size_t dim = n * n;
    std::vector<std::string> names(dim);
    std::vector<Rational> table(dim * dim * dim);
    auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            names[idx(r, c)] = "E" + std::to_string(r + 1) + std::to_string(c + 1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    if (b == c)
                        table[(idx(a, b) * dim + idx(c, d)) * dim + idx(a, d)] = 1;
    return Algebra(std::move(names), std::move(table));
}

Algebra make_upper_triangular(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) units.emplace_back(r, c);
    const std::size_t dim = units.size();
    std::vector<std::string> names(dim);
    for (std::size_t u = 0; u < dim; ++u)
        names[u] = "E" + std::to_string(units[u].first + 1) + std::to_string(units[u].second + 1);
    std::vector<Rational> table(dim * dim * dim);
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t v = 0; v < dim; ++v) {
            if (units[u].second != units[v].first) continue;
            auto target = std::make_pair(units[u].first, units[v].second);
            for (std::size_t w = 0; w < dim; ++w)
                if (units[w] == target) table[(u * dim + v) * dim + w] = 1;
        }
    return Algebra(std::move(names), std::move(table));
}

// split "dsum(A,B)" arguments at the top-level comma
std::pair<std::string, std::string> split_dsum_args(const std::string& inner) {
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == '(') ++depth;
        else if (inner[i] == ')') --depth;
        else if (inner[i] == ',' && depth == 0)
            return {inner.substr(0, i), inner.substr(i + 1)};
    }
    throw Error(ErrorCode::UnknownName, "dsum needs two comma-separated arguments");
}

}  // namespace

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    const std::size_t n = a.dim(), m = b.dim(), dim = n + m;
    std::vector<std::string> names = a.basis_names();
    for (const auto& bn : b.basis_names()) {
        std::string candidate = bn;
        while (std::find(names.begin(), names.end(), candidate) != names.end())
            candidate += "'";
        names.push_back(candidate);
    }
    std::vector<Rational> table(dim * dim * dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                table[(i * dim + j) * dim + k] = a.structure(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                table[((n + i) * dim + (n + j)) * dim + (n + k)] = b.structure(i, j, k);
    return Algebra(std::move(names), std::move(table));
}

Algebra registry(const std::string& name) {
    if (name == "L1") {
        // x*x = x, y*x = y
        return make_algebra({"x", "y"},
                            {{0, 0, coords({1, 0})}, {1, 0, coords({0, 1})}}, std::nullopt);
    }
    if (name == "L2") {
        // y*x = x, y*y = y
        return make_algebra({"x", "y"},
                            {{1, 0, coords({1, 0})}, {1, 1, coords({0, 1})}}, std::nullopt);
    }
    if (name == "T2") {
        // unity 1; x^2 = x, x y = 0, y x = -1 + x + y, y^2 = y
        return make_algebra({"1", "x", "y"},
                            {{0, 0, coords({1, 0, 0})},
                             {0, 1, coords({0, 1, 0})},
                             {0, 2, coords({0, 0, 1})},
                             {1, 0, coords({0, 1, 0})},
                             {1, 1, coords({0, 1, 0})},
                             {2, 0, coords({0, 0, 1})},
                             {2, 1, coords({-1, 1, 1})},
                             {2, 2, coords({0, 0, 1})}},
                            0);
    }
    if (name == "D") {
        // dual numbers Q[t]/t^2
        return make_algebra({"1", "t"},
                            {{0, 0, coords({1, 0})},
                             {0, 1, coords({0, 1})},
                             {1, 0, coords({0, 1})}},
                            0);
    }
    if (name == "C2") {
        // Q[t]/(t^2-1)
        return make_algebra({"1", "t"},
                            {{0, 0, coords({1, 0})},
                             {0, 1, coords({0, 1})},
                             {1, 0, coords({0, 1})},
                             {1, 1, coords({1, 0})}},
                            0);
    }
    if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'M' || name[0] == 'T')) {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
        if (digits) {
            std::size_t n = std::stoul(name.substr(1));
            if (n == 0 || n > 12)
                throw Error(ErrorCode::UnknownName, "registry size out of range: " + name);
            if (name[0] == 'Z') return make_zero(n);
            // M/T unities are E11+...+Enn, not basis vectors; find_unity locates them
            if (name[0] == 'M') return make_full_matrix(n);
            // T2 handled above; Tn here is n x n upper-triangular matrices
            return make_upper_triangular(n);
        }
    }
    if (name.rfind("dsum(", 0) == 0 && name.back() == ')') {
        auto [left, right] = split_dsum_args(name.substr(5, name.size() - 6));
        return direct_sum(registry(left), registry(right));
    }
    throw Error(ErrorCode::UnknownName, "unknown registry algebra: " + name);
}

}  // namespace algpencil
