#pragma once

#include <string>
#include <vector>

#include "algpencil/factor.hpp"
#include "algpencil/matrix.hpp"
#include "algpencil/poly.hpp"

namespace algpencil {

// Homogeneous bivariate form sum_k c[k] * lambda^k * mu^(degree-k).
class BinaryForm {
public:
    BinaryForm() : degree_(0), c_(1) {}
    BinaryForm(int degree, std::vector<Rational> coeffs);

    static BinaryForm zero(int degree);

    int degree() const { return degree_; }
    bool is_zero() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational eval(const Rational& lambda, const Rational& mu) const;
    BinaryForm swapped() const;  // chi(mu, lambda)

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& s, const BinaryForm& a);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b);

    std::string str() const;  // human readable, lambda/mu variables

private:
    int degree_;
    std::vector<Rational> c_;  // size degree_+1
};

// chi = constant * lambda^mult_lambda * mu^mult_mu * prod_i hom(p_i)^{m_i},
// where hom(p) is the binary form whose (alpha*lambda + mu)-type linear
// factors have alpha running over the roots of the irreducible polynomial p.
// A rational spectral value alpha therefore appears as the degree-1 factor
// with root alpha; alpha = infinity as the lambda power; alpha = 0 as the mu
// power.
struct FactoredForm {
    Rational constant;
    int mult_lambda = 0;
    int mult_mu = 0;
    std::vector<std::pair<UnivariatePoly, int>> factors;  // (alpha minimal poly, multiplicity)

    BinaryForm expand() const;
    // multiplicity of the linear factor (alpha*lambda + mu)
    int multiplicity_of(const Rational& alpha) const;
    int multiplicity_of_orbit(const UnivariatePoly& alpha_minpoly) const;
    std::string str() const;
};

// Binary form whose roots (in the alpha sense above) are exactly the roots
// of p, taken once each: prod_{p(alpha)=0} (alpha*lambda + mu) up to the
// leading coefficient of p.
BinaryForm homogenize_alpha_poly(const UnivariatePoly& p);

FactoredForm factor_form(const BinaryForm& f);

// det(lambda*a + mu*b) as an exact binary form of degree n = a.rows(),
// computed by evaluation at n+1 rational points and Lagrange interpolation.
BinaryForm det_pencil(const Matrix& a, const Matrix& b);

}  // namespace algpencil
