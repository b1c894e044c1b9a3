#include "algpencil/pencil.hpp"

#include <sstream>

#include "algpencil/errors.hpp"
#include "algpencil/rng.hpp"

namespace algpencil {

Rational Functional::apply(const Element& e) const {
    if (e.coords.size() != values.size())
        throw Error(ErrorCode::DimensionMismatch, "functional applied to wrong dimension");
    Rational acc = 0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += values[i] * e.coords[i];
    return acc;
}

std::string Functional::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ",";
        os << rational_str(values[i]);
    }
    os << ")";
    return os.str();
}

SpectralValue SpectralValue::finite(const Rational& value) {
    SpectralValue s;
    s.kind_ = Kind::Finite;
    s.value_ = value;
    return s;
}

SpectralValue SpectralValue::infinity() {
    SpectralValue s;
    s.kind_ = Kind::Infinity;
    return s;
}

SpectralValue SpectralValue::orbit(const UnivariatePoly& minpoly) {
    if (minpoly.degree() < 2)
        throw Error(ErrorCode::InvalidAlpha, "orbit minimal polynomial must have degree >= 2");
    SpectralValue s;
    s.kind_ = Kind::Orbit;
    s.minpoly_ = minpoly.primitive();
    return s;
}

SpectralValue SpectralValue::reciprocal() const {
    switch (kind_) {
    case Kind::Infinity: return finite(0);
    case Kind::Finite:
        if (value_ == 0) return infinity();
        return finite(Rational(1) / value_);
    case Kind::Orbit: {
        // reverse coefficients: roots map to reciprocals (constant term is
        // nonzero for an irreducible of degree >= 2)
        std::vector<Rational> c(minpoly_.coeffs().rbegin(), minpoly_.coeffs().rend());
        return orbit(UnivariatePoly(std::move(c)).primitive());
    }
    }
    return infinity();  // unreachable
}

std::string SpectralValue::str() const {
    switch (kind_) {
    case Kind::Finite: return rational_str(value_);
    case Kind::Infinity: return "inf";
    case Kind::Orbit: return "roots of " + minpoly_.str("a");
    }
    return "?";
}

bool operator==(const SpectralValue& a, const SpectralValue& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case SpectralValue::Kind::Finite: return a.value_ == b.value_;
    case SpectralValue::Kind::Infinity: return true;
    case SpectralValue::Kind::Orbit: return a.minpoly_ == b.minpoly_;
    }
    return false;
}

EvaluatedPencil evaluate(const Algebra& a, const Functional& f) {
    const std::size_t n = a.dim();
    if (f.values.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "functional dimension mismatch");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += a.structure(i, j, k) * f.values[k];
            m.at(i, j) = acc;
        }
    return {m, m.transpose()};
}

CharPencil charpoly(const Algebra& a, const Functional& f) {
    EvaluatedPencil p = evaluate(a, f);
    BinaryForm chi = det_pencil(p.m, p.mt);
    CharPencil out{chi, std::nullopt};
    if (!chi.is_zero()) out.factored = factor_form(chi);
    return out;
}

Subspace stabilizer(const EvaluatedPencil& p, const SpectralValue& alpha) {
    if (alpha.is_orbit())
        throw Error(ErrorCode::InvalidAlpha,
                    "stabilizer of an algebraic orbit: use the Jordan decomposition");
    Matrix target = alpha.is_infinity() ? p.mt : p.m - alpha.value() * p.mt;
    RrefResult r = rref(target);
    return Subspace::span(r.left_kernel, p.m.rows());
}

Subspace stabilizer(const Algebra& a, const Functional& f, const SpectralValue& alpha) {
    return stabilizer(evaluate(a, f), alpha);
}

Subspace nil(const Algebra& a, const Functional& f) {
    EvaluatedPencil p = evaluate(a, f);
    return intersect(stabilizer(p, SpectralValue::finite(0)),
                     stabilizer(p, SpectralValue::infinity()));
}

QForm q_form(const Algebra& a, const Functional& f) {
    EvaluatedPencil p = evaluate(a, f);
    Subspace stab1 = stabilizer(p, SpectralValue::finite(1));
    Matrix gram(stab1.dim(), stab1.dim());
    for (std::size_t i = 0; i < stab1.dim(); ++i)
        for (std::size_t j = 0; j < stab1.dim(); ++j)
            gram.at(i, j) =
                f.apply(a.multiply(Element{stab1.basis_row(i)}, Element{stab1.basis_row(j)}));
    QForm out{stab1, gram, det_ff(gram) != 0, std::nullopt};
    CharPencil cp = charpoly(a, f);
    if (cp.factored) out.lambda_plus_mu_multiplicity = cp.factored->multiplicity_of(1);
    return out;
}

Functional random_functional(const Algebra& a, std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng = child_rng(seed, index);
    Functional f;
    f.values.resize(a.dim());
    for (auto& v : f.values) v = Rational(rng.range(-1000, 1000));
    return f;
}

int lie_index(const Algebra& a, std::uint64_t seed, int trials) {
    if (trials < 1) throw Error(ErrorCode::DimensionMismatch, "lie_index needs trials >= 1");
    std::size_t best = a.dim();
    for (int t = 0; t < trials; ++t) {
        Functional f = random_functional(a, seed, static_cast<std::uint64_t>(t));
        EvaluatedPencil p = evaluate(a, f);
        RrefResult r = rref(p.m - p.mt);
        best = std::min(best, a.dim() - r.rank);
    }
    return static_cast<int>(best);
}

GenericSample sample_generic(const Algebra& a, std::uint64_t seed) {
    constexpr int kMaxAttempts = 16;
    struct Candidate {
        Functional f;
        std::size_t skew, s0, s1;
    };
    std::optional<GenericSample> accepted;
    std::vector<Candidate> pool;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Functional f = random_functional(a, seed, static_cast<std::uint64_t>(attempt));
        EvaluatedPencil p = evaluate(a, f);
        if (det_pencil(p.m, p.mt).is_zero()) continue;
        Candidate c;
        c.f = f;
        c.skew = a.dim() - rref(p.m - p.mt).rank;
        c.s0 = stabilizer(p, SpectralValue::finite(0)).dim();
        c.s1 = stabilizer(p, SpectralValue::finite(1)).dim();
        pool.push_back(c);
        if (!accepted) {
            GenericSample g;
            g.f = f;
            g.certificate.attempts = attempt + 1;
            g.certificate.chi_nonzero = true;
            g.certificate.skew_kernel_dim = c.skew;
            g.certificate.stab0_dim = c.s0;
            g.certificate.stab1_dim = c.s1;
            accepted = g;
        }
    }
    if (!accepted)
        throw Error(ErrorCode::DegeneratePencil,
                    "characteristic polynomial vanished at every sampled functional");
    GenericityCertificate& cert = accepted->certificate;
    cert.min_skew_kernel_dim = cert.skew_kernel_dim;
    cert.min_stab0_dim = cert.stab0_dim;
    cert.min_stab1_dim = cert.stab1_dim;
    for (const Candidate& c : pool) {
        cert.min_skew_kernel_dim = std::min(cert.min_skew_kernel_dim, c.skew);
        cert.min_stab0_dim = std::min(cert.min_stab0_dim, c.s0);
        cert.min_stab1_dim = std::min(cert.min_stab1_dim, c.s1);
    }
    cert.skew_kernel_minimal = cert.skew_kernel_dim == cert.min_skew_kernel_dim;
    cert.stab0_minimal = cert.stab0_dim == cert.min_stab0_dim;
    cert.stab1_minimal = cert.stab1_dim == cert.min_stab1_dim;
    return *accepted;
}

}  // namespace algpencil
