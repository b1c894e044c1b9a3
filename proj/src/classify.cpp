#include "algpencil/classify.hpp"

#include "algpencil/errors.hpp"

namespace algpencil {

namespace {

constexpr int kMaxSamples = 64;

bool is_commutative(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!(a.product_of_basis(i, j) == a.product_of_basis(j, i))) return false;
    return true;
}

void require_associative(const Algebra& a) {
    if (auto v = check_associativity(a))
        throw Error(ErrorCode::NotAssociative,
                    "input is not associative (first violation at basis triple " +
                        std::to_string(v->i) + "," + std::to_string(v->j) + "," +
                        std::to_string(v->k) + ")");
}

// coordinates of ambient row vectors in the basis given by the rows of p
std::vector<Rational> in_basis(const Matrix& pinv, const std::vector<Rational>& v) {
    return row_times(v, pinv);
}

Element elem(const std::vector<Rational>& v) { return Element{v}; }

}  // namespace

std::string label_name(CanonicalLabel label) {
    switch (label) {
    case CanonicalLabel::COMM: return "COMM";
    case CanonicalLabel::L1: return "L1";
    case CanonicalLabel::L2: return "L2";
    case CanonicalLabel::T2_UPPER_TRIANGULAR: return "T2_UPPER_TRIANGULAR";
    }
    return "?";
}

CanonicalForm canon_dim2(const Algebra& a, std::uint64_t seed) {
    if (a.dim() != 2)
        throw Error(ErrorCode::WrongDimension, "canon_dim2 needs a 2-dimensional algebra");
    require_associative(a);

    if (is_commutative(a))
        return CanonicalForm{CanonicalLabel::COMM, Matrix::identity(2), Functional{{0, 0}}};

    for (int attempt = 0; attempt < kMaxSamples; ++attempt) {
        Functional f = random_functional(a, seed, static_cast<std::uint64_t>(attempt));
        CharPencil cp = charpoly(a, f);
        if (!cp.factored) continue;
        // the generic shape for index 0: chi = c * lambda * mu
        if (cp.factored->mult_lambda != 1 || cp.factored->mult_mu != 1) continue;

        EvaluatedPencil p = evaluate(a, f);
        Subspace s0 = stabilizer(p, SpectralValue::finite(0));
        Subspace sinf = stabilizer(p, SpectralValue::infinity());
        if (s0.dim() != 1 || sinf.dim() != 1) continue;

        Matrix adapted(2, 2);
        adapted.set_row(0, s0.basis_row(0));
        adapted.set_row(1, sinf.basis_row(0));
        if (det_ff(adapted) == 0) continue;
        Matrix ainv = inverse(adapted);

        Element x0 = elem(adapted.row(0)), y0 = elem(adapted.row(1));
        auto tbl = [&](const Element& u, const Element& v) {
            return in_basis(ainv, a.multiply(u, v).coords);
        };
        std::vector<Rational> xx = tbl(x0, x0), xy = tbl(x0, y0), yx = tbl(y0, x0),
                              yy = tbl(y0, y0);
        // x in Stab(0), y in Stab(inf) force the parameterized table shape
        Rational mu = xx[0], beta = yx[0], gamma = yx[1], nu = yy[1];
        if (xx[1] != 0 || !(xy[0] == 0 && xy[1] == 0) || yy[0] != 0) continue;
        // the associativity relations of the 2-dimensional proof
        if (!(mu == gamma && beta == nu && mu * nu == 0)) continue;
        if (mu == 0 && nu == 0) continue;  // would force commutativity

        Matrix transform(2, 2);
        CanonicalLabel label;
        if (mu != 0) {
            label = CanonicalLabel::L1;
            transform.set_row(0, (Rational(1) / mu * x0).coords);
            transform.set_row(1, y0.coords);
        } else {
            label = CanonicalLabel::L2;
            transform.set_row(0, x0.coords);
            transform.set_row(1, (Rational(1) / nu * y0).coords);
        }
        Algebra canon = change_basis(a, transform);
        if (!(canon.table() == registry(label == CanonicalLabel::L1 ? "L1" : "L2").table()))
            continue;  // defensive; the relations above should already guarantee this
        return CanonicalForm{label, transform, f};
    }
    throw Error(ErrorCode::DegeneratePencil,
                "no usable functional found for the 2-dimensional classification");
}

CanonicalForm canon_dim3_unital(const Algebra& a, std::uint64_t seed) {
    if (a.dim() != 3)
        throw Error(ErrorCode::WrongDimension, "canon_dim3_unital needs a 3-dimensional algebra");
    auto unity = find_unity(a);
    if (!unity) throw Error(ErrorCode::NoUnity, "input has no two-sided unity");
    require_associative(a);

    if (is_commutative(a))
        return CanonicalForm{CanonicalLabel::COMM, Matrix::identity(3), Functional{{0, 0, 0}}};

    for (int attempt = 0; attempt < kMaxSamples; ++attempt) {
        Functional f = random_functional(a, seed, static_cast<std::uint64_t>(attempt));
        Rational f1 = f.apply(*unity);
        if (f1 == 0) continue;
        for (auto& v : f.values) v /= f1;  // normalize F(1) = 1
        CharPencil cp = charpoly(a, f);
        if (!cp.factored) continue;
        // index-1 generic shape: chi = c * lambda * mu * (lambda + mu); the
        // degenerate sub-tables of the proof would make chi vanish
        if (cp.factored->mult_lambda != 1 || cp.factored->mult_mu != 1 ||
            cp.factored->multiplicity_of(1) != 1)
            continue;

        EvaluatedPencil p = evaluate(a, f);
        Subspace s0 = stabilizer(p, SpectralValue::finite(0));
        Subspace sinf = stabilizer(p, SpectralValue::infinity());
        if (s0.dim() != 1 || sinf.dim() != 1) continue;

        Matrix adapted(3, 3);
        adapted.set_row(0, unity->coords);
        adapted.set_row(1, s0.basis_row(0));
        adapted.set_row(2, sinf.basis_row(0));
        if (det_ff(adapted) == 0) continue;
        Matrix ainv = inverse(adapted);

        Element x0 = elem(adapted.row(1)), y0 = elem(adapted.row(2));
        auto tbl = [&](const Element& u, const Element& v) {
            return in_basis(ainv, a.multiply(u, v).coords);
        };
        std::vector<Rational> xx = tbl(x0, x0), xy = tbl(x0, y0), yx = tbl(y0, x0),
                              yy = tbl(y0, y0);
        if (xx[0] != 0 || xx[2] != 0) continue;   // x^2 = alpha x
        if (!(xy[0] == 0 && xy[1] == 0 && xy[2] == 0)) continue;  // xy = 0
        if (yy[0] != 0 || yy[1] != 0) continue;   // y^2 = beta y
        Rational alpha = xx[1], beta = yy[2];
        // associativity forces yx = -alpha beta + beta x + alpha y
        if (!(yx[0] == -alpha * beta && yx[1] == beta && yx[2] == alpha)) continue;
        if (alpha == 0 || beta == 0) continue;  // non-generic; resample

        Matrix transform(3, 3);
        transform.set_row(0, unity->coords);
        transform.set_row(1, (Rational(1) / alpha * x0).coords);
        transform.set_row(2, (Rational(1) / beta * y0).coords);
        Algebra canon = change_basis(a, transform);
        if (!(canon.table() == registry("T2").table())) continue;
        return CanonicalForm{CanonicalLabel::T2_UPPER_TRIANGULAR, transform, f};
    }
    throw Error(ErrorCode::DegeneratePencil,
                "no usable functional found for the 3-dimensional classification");
}

namespace {

// the coarse COMM invariants: unity existence and the generic radical
// dimension of the (symmetric) evaluated table
std::pair<bool, std::size_t> comm_invariants(const Algebra& a, std::uint64_t seed) {
    std::size_t best_rank = 0;
    for (std::uint64_t t = 0; t < 8; ++t) {
        Functional f = random_functional(a, seed, t);
        EvaluatedPencil p = evaluate(a, f);
        best_rank = std::max(best_rank, rref(p.m).rank);
    }
    return {find_unity(a).has_value(), a.dim() - best_rank};
}

}  // namespace

bool iso_check(const Algebra& a, const Algebra& b, std::uint64_t seed) {
    auto canon = [&](const Algebra& x) {
        if (x.dim() == 2) return canon_dim2(x, seed);
        if (x.dim() == 3) {
            if (!find_unity(x))
                throw Error(ErrorCode::Unsupported,
                            "3-dimensional isomorphism testing needs unital inputs");
            return canon_dim3_unital(x, seed);
        }
        throw Error(ErrorCode::Unsupported, "iso_check supports dimensions 2 and 3 only");
    };
    if ((a.dim() != 2 && a.dim() != 3) || (b.dim() != 2 && b.dim() != 3))
        throw Error(ErrorCode::Unsupported, "iso_check supports dimensions 2 and 3 only");
    if (a.dim() != b.dim()) return false;
    CanonicalForm ca = canon(a);
    CanonicalForm cb = canon(b);
    if (ca.label != cb.label) return false;
    if (ca.label != CanonicalLabel::COMM) return true;
    return comm_invariants(a, seed) == comm_invariants(b, seed);
}

}  // namespace algpencil
