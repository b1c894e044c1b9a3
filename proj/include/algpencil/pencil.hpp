#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "algpencil/algebra.hpp"
#include "algpencil/binary_form.hpp"

namespace algpencil {

// Linear functional on the algebra, F(e_i) = values[i].
struct Functional {
    std::vector<Rational> values;

    Rational apply(const Element& e) const;
    std::string str() const;
};

// Multiplication table evaluated at F: m[i][j] = F(e_i e_j).
struct EvaluatedPencil {
    Matrix m;
    Matrix mt;
};

// A spectral value alpha of the pencil: a rational number, infinity, or a
// Galois orbit of irrational values given by its minimal polynomial.
class SpectralValue {
public:
    enum class Kind { Finite, Infinity, Orbit };

    static SpectralValue finite(const Rational& value);
    static SpectralValue infinity();
    static SpectralValue orbit(const UnivariatePoly& minpoly);

    Kind kind() const { return kind_; }
    const Rational& value() const { return value_; }
    const UnivariatePoly& minpoly() const { return minpoly_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_orbit() const { return kind_ == Kind::Orbit; }

    // alpha -> 1/alpha; infinity <-> 0; orbits get the reciprocal-root poly.
    SpectralValue reciprocal() const;

    std::string str() const;
    friend bool operator==(const SpectralValue& a, const SpectralValue& b);

private:
    Kind kind_ = Kind::Infinity;
    Rational value_;
    UnivariatePoly minpoly_;
};

struct CharPencil {
    BinaryForm chi;
    std::optional<FactoredForm> factored;  // absent iff chi == 0
};

// Q_F restricted to Stab_F(1), plus the (lambda+mu) multiplicity of chi for
// direct comparison with the Lie index.
struct QForm {
    Subspace stab1;
    Matrix gram;
    bool nondegenerate;
    std::optional<int> lambda_plus_mu_multiplicity;  // absent iff chi == 0
};

struct GenericityCertificate {
    int attempts = 0;  // draws used, accepted one included
    std::size_t skew_kernel_dim = 0, stab0_dim = 0, stab1_dim = 0;
    std::size_t min_skew_kernel_dim = 0, min_stab0_dim = 0, min_stab1_dim = 0;
    bool skew_kernel_minimal = false, stab0_minimal = false, stab1_minimal = false;
    bool chi_nonzero = false;
};

struct GenericSample {
    Functional f;
    GenericityCertificate certificate;
};

EvaluatedPencil evaluate(const Algebra& a, const Functional& f);

CharPencil charpoly(const Algebra& a, const Functional& f);

// Stab_F(alpha) as the left kernel of (m - alpha*mt); alpha = infinity uses
// mt alone. Orbit arguments are rejected (jordan::decompose handles those).
Subspace stabilizer(const Algebra& a, const Functional& f, const SpectralValue& alpha);
Subspace stabilizer(const EvaluatedPencil& p, const SpectralValue& alpha);

Subspace nil(const Algebra& a, const Functional& f);

QForm q_form(const Algebra& a, const Functional& f);

// Minimum over `trials` seeded functionals of dim ker(m - mt).
int lie_index(const Algebra& a, std::uint64_t seed, int trials = 8);

// Seeded integer functionals from [-1000,1000]^n, at most 16 attempts; the
// first with nonzero chi is accepted. Throws DegeneratePencil when all fail.
GenericSample sample_generic(const Algebra& a, std::uint64_t seed);

Functional random_functional(const Algebra& a, std::uint64_t seed, std::uint64_t index);

}  // namespace algpencil
