#include "algpencil/binary_form.hpp"

#include <sstream>

#include "algpencil/errors.hpp"

namespace algpencil {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(degree_) + 1)
        throw Error(ErrorCode::DimensionMismatch, "binary form coefficient count mismatch");
}

BinaryForm BinaryForm::zero(int degree) {
    return BinaryForm(degree, std::vector<Rational>(static_cast<std::size_t>(degree) + 1));
}

bool BinaryForm::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

Rational BinaryForm::eval(const Rational& lambda, const Rational& mu) const {
    Rational acc = 0;
    // sum c_k lambda^k mu^(d-k)
    Rational lp = 1;
    std::vector<Rational> lpow(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) {
        lpow[k] = lp;
        lp *= lambda;
    }
    Rational mp = 1;
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc += c_[k] * lpow[k] * mp;
        mp *= mu;
    }
    return acc;
}

BinaryForm BinaryForm::swapped() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return BinaryForm(degree_, std::move(r));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BinaryForm(a.degree_ + b.degree_, std::move(r));
}

BinaryForm operator*(const Rational& s, const BinaryForm& a) {
    std::vector<Rational> r(a.c_.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = s * a.c_[k];
    return BinaryForm(a.degree_, std::move(r));
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
}

std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree_; k >= 0; --k) {
        Rational c = coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = c > 0 ? c : -c;
        int mu_pow = degree_ - k;
        bool unit = (a == 1) && (k > 0 || mu_pow > 0);
        if (!unit) os << rational_str(a);
        bool star = !unit;
        if (k > 0) {
            if (star) os << "*";
            os << "lambda";
            if (k > 1) os << "^" << k;
            star = true;
        }
        if (mu_pow > 0) {
            if (star) os << "*";
            os << "mu";
            if (mu_pow > 1) os << "^" << mu_pow;
        }
        first = false;
    }
    return os.str();
}

BinaryForm homogenize_alpha_poly(const UnivariatePoly& p) {
    // prod over roots alpha of p of (alpha*lambda + mu) scales to
    // sum_k (-1)^k c_{d-k} lambda^k mu^{d-k} where c are p's coefficients.
    const int d = p.degree();
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        Rational v = p.coeff(static_cast<std::size_t>(d - k));
        out[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : -v;
    }
    return BinaryForm(d, std::move(out));
}

BinaryForm FactoredForm::expand() const {
    BinaryForm acc(0, {constant});
    {
        std::vector<Rational> lam(2);
        lam[1] = 1;  // lambda
        BinaryForm lambda_form(1, lam);
        for (int i = 0; i < mult_lambda; ++i) acc = acc * lambda_form;
    }
    {
        std::vector<Rational> mu(2);
        mu[0] = 1;  // mu
        BinaryForm mu_form(1, mu);
        for (int i = 0; i < mult_mu; ++i) acc = acc * mu_form;
    }
    for (const auto& [p, m] : factors) {
        BinaryForm f = homogenize_alpha_poly(p);
        for (int i = 0; i < m; ++i) acc = acc * f;
    }
    return acc;
}

int FactoredForm::multiplicity_of(const Rational& alpha) const {
    if (alpha == 0) return mult_mu;
    for (const auto& [p, m] : factors) {
        if (p.degree() != 1) continue;
        if (p.eval(alpha) == 0) return m;
    }
    return 0;
}

int FactoredForm::multiplicity_of_orbit(const UnivariatePoly& alpha_minpoly) const {
    UnivariatePoly key = alpha_minpoly.primitive();
    for (const auto& [p, m] : factors)
        if (p == key) return m;
    return 0;
}

std::string FactoredForm::str() const {
    std::ostringstream os;
    os << rational_str(constant);
    if (mult_lambda > 0) {
        os << " * lambda";
        if (mult_lambda > 1) os << "^" << mult_lambda;
    }
    if (mult_mu > 0) {
        os << " * mu";
        if (mult_mu > 1) os << "^" << mult_mu;
    }
    for (const auto& [p, m] : factors) {
        os << " * (" << homogenize_alpha_poly(p).str() << ")";
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

FactoredForm factor_form(const BinaryForm& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "cannot factor the zero form");

    int lo = 0;
    while (f.coeff(static_cast<std::size_t>(lo)) == 0) ++lo;
    int hi = f.degree();
    while (f.coeff(static_cast<std::size_t>(hi)) == 0) --hi;

    FactoredForm out;
    out.mult_lambda = lo;           // alpha = infinity factors
    out.mult_mu = f.degree() - hi;  // alpha = 0 factors

    // Residual psi(lambda,mu) = sum_{k=lo..hi} c_k lambda^{k-lo} mu^{hi-k}.
    // psi(1,t) has roots t = -alpha; factor it and flip signs to get the
    // alpha minimal polynomials.
    const int d = hi - lo;
    if (d == 0) {
        out.constant = f.coeff(static_cast<std::size_t>(hi));
        return out;
    }
    std::vector<Rational> u(static_cast<std::size_t>(d) + 1);
    for (int k = lo; k <= hi; ++k)
        u[static_cast<std::size_t>(hi - k)] = f.coeff(static_cast<std::size_t>(k));
    PolyFactorization pf = factor_poly(UnivariatePoly(std::move(u)));
    for (const auto& [q, m] : pf.factors) {
        // q(t) has roots -alpha; substitute t -> -t
        std::vector<Rational> c(q.coeffs());
        for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
        out.factors.emplace_back(UnivariatePoly(std::move(c)).primitive(), m);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const auto& ca = a.first.coeffs();
        const auto& cb = b.first.coeffs();
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    });

    out.constant = 1;
    BinaryForm probe = out.expand();
    // match any nonzero coefficient to pin the constant
    for (std::size_t k = 0; k < probe.coeffs().size(); ++k) {
        if (probe.coeff(k) != 0) {
            out.constant = f.coeff(k + static_cast<std::size_t>(0)) / probe.coeff(k);
            break;
        }
    }
    if (!(out.expand() == f))
        throw Error(ErrorCode::ZeroForm, "internal: factored form does not expand back");
    return out;
}

BinaryForm det_pencil(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "pencil matrices must be square and equal size");
    const int n = static_cast<int>(a.rows());
    if (n == 0) return BinaryForm(0, {Rational(1)});

    // g(t) = det(t*a + b) has degree <= n; interpolate at n+1 points.
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= n; ++i) {
        Rational t(i);
        Matrix m(a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                m.at(r, c) = t * a.at(r, c) + b.at(r, c);
        xs.push_back(t);
        ys.push_back(det_ff(m));
    }
    // Lagrange interpolation to coefficients.
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        // basis polynomial prod_{j != i} (t - x_j)/(x_i - x_j)
        std::vector<Rational> basis{1};
        Rational denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rational> nb(basis.size() + 1);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                nb[k + 1] += basis[k];
                nb[k] -= xs[static_cast<std::size_t>(j)] * basis[k];
            }
            basis = std::move(nb);
            denom *= xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
        }
        Rational w = ys[static_cast<std::size_t>(i)] / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) g[k] += w * basis[k];
    }
    // homogenize: chi(lambda,mu) = sum g_k lambda^k mu^(n-k)
    return BinaryForm(n, std::move(g));
}

}  // namespace algpencil
