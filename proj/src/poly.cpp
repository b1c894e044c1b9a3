#include "algpencil/poly.hpp"

#include <sstream>

#include "algpencil/errors.hpp"

namespace algpencil {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
    return UnivariatePoly(std::vector<Rational>{c});
}

UnivariatePoly UnivariatePoly::of(std::initializer_list<Rational> coeffs) {
    return UnivariatePoly(std::vector<Rational>(coeffs));
}

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UnivariatePoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return UnivariatePoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(k) * c_[k];
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading()) * (*this);
}

UnivariatePoly UnivariatePoly::primitive(Rational* content) const {
    if (is_zero()) {
        if (content) *content = 0;
        return *this;
    }
    Int l = 1;
    for (const auto& v : c_) l = boost::multiprecision::lcm(l, den(v));
    Int g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, num(Rational(l) * v));
    Rational cont(g, l);
    if (leading() < 0) cont = -cont;
    std::vector<Rational> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] / cont;
    if (content) *content = cont;
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return UnivariatePoly(std::move(r));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return UnivariatePoly(std::move(r));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UnivariatePoly(std::move(r));
}

UnivariatePoly operator*(const Rational& s, const UnivariatePoly& a) {
    std::vector<Rational> r(a.c_.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = s * a.c_[k];
    return UnivariatePoly(std::move(r));
}

bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
    return a.c_ == b.c_;
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = c > 0 ? c : -c;
        if (k == 0 || a != 1) os << rational_str(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

PolyDivMod divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UnivariatePoly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational q = c / b.leading();
        quot[static_cast<std::size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
    }
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly poly_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly x = a, y = b;
    while (!y.is_zero()) {
        UnivariatePoly r = divmod(x, y).remainder;
        x = y;
        y = r;
    }
    return x.monic();
}

bool exact_divide(const UnivariatePoly& a, const UnivariatePoly& b, UnivariatePoly* q) {
    PolyDivMod dm = divmod(a, b);
    if (!dm.remainder.is_zero()) return false;
    if (q) *q = dm.quotient;
    return true;
}

UnivariatePoly charpoly_matrix(const Matrix& m) {
    if (!m.is_square())
        throw Error(ErrorCode::NonSquare, "characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix acc = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        Rational ck = -acc.trace() / Rational(k);
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += ck;
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly minimal_polynomial(const Matrix& m) {
    if (!m.is_square())
        throw Error(ErrorCode::NonSquare, "minimal polynomial of non-square matrix");
    const std::size_t n = m.rows();
    // Rows of K are vec(m^0), vec(m^1), ...; the first dependent power gives
    // the minimal polynomial coefficients.
    std::vector<Matrix> powers;
    powers.push_back(Matrix::identity(n));
    for (std::size_t d = 1; d <= n; ++d) powers.push_back(powers.back() * m);
    for (std::size_t d = 1; d <= n; ++d) {
        Matrix k(d + 1, n * n);
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    k.at(i, a * n + b) = powers[i].at(a, b);
        RrefResult r = rref(k);
        if (r.rank <= d) {
            // kernel row with nonzero last coordinate yields the dependency
            for (std::size_t kr = 0; kr < r.left_kernel.rows(); ++kr) {
                auto v = r.left_kernel.row(kr);
                if (v[d] != 0) {
                    std::vector<Rational> coeffs(v.begin(), v.begin() + static_cast<long>(d + 1));
                    return UnivariatePoly(std::move(coeffs)).monic();
                }
            }
        }
    }
    throw Error(ErrorCode::NonSquare, "minimal polynomial not found");  // unreachable
}

Matrix poly_at_matrix(const UnivariatePoly& p, const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "poly_at_matrix needs square matrix");
    Matrix acc(m.rows(), m.cols());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        Rational c = p.coeff(static_cast<std::size_t>(k));
        if (c != 0)
            for (std::size_t i = 0; i < m.rows(); ++i) acc.at(i, i) += c;
    }
    return acc;
}

}  // namespace algpencil
