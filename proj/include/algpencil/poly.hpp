#pragma once

#include <string>
#include <vector>

#include "algpencil/matrix.hpp"
#include "algpencil/rational.hpp"

namespace algpencil {

// Univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient vector.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs);
    static UnivariatePoly constant(const Rational& c);
    // c0 + c1 t + ... from an initializer list.
    static UnivariatePoly of(std::initializer_list<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;

    UnivariatePoly derivative() const;
    UnivariatePoly monic() const;

    // Primitive integer normal form: integer coefficients with gcd 1 and
    // positive leading coefficient. Returns the removed rational content.
    UnivariatePoly primitive(Rational* content = nullptr) const;

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const Rational& s, const UnivariatePoly& a);
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b);

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Euclidean division over Q; throws ZeroPolynomial on zero divisor.
struct PolyDivMod {
    UnivariatePoly quotient;
    UnivariatePoly remainder;
};
PolyDivMod divmod(const UnivariatePoly& a, const UnivariatePoly& b);

// Monic gcd.
UnivariatePoly poly_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

// Returns true and sets q when b exactly divides a.
bool exact_divide(const UnivariatePoly& a, const UnivariatePoly& b, UnivariatePoly* q);

// Monic characteristic polynomial det(tI - m) by Faddeev-LeVerrier.
UnivariatePoly charpoly_matrix(const Matrix& m);

// Minimal polynomial of a square matrix (monic), found as the first linear
// dependency among I, m, m^2, ...
UnivariatePoly minimal_polynomial(const Matrix& m);

// Evaluate p at a matrix argument.
Matrix poly_at_matrix(const UnivariatePoly& p, const Matrix& m);

}  // namespace algpencil
