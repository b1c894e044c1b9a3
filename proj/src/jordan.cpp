#include "algpencil/jordan.hpp"

#include <algorithm>
#include <sstream>

#include "algpencil/errors.hpp"

namespace algpencil {

namespace {

const Rational kShiftSequence[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

Matrix shifted_pencil(const EvaluatedPencil& p, const Rational& mu) {
    return p.m - mu * p.mt;
}

// q(s) for the s-side polynomial of a spectral value: finite alpha gives
// I - (alpha-mu)s up to sign, infinity gives s, orbits transport their
// alpha-polynomial through alpha = mu + 1/sigma.
Matrix block_operator(const PencilOperator& op, const SpectralValue& alpha) {
    const std::size_t n = op.s.rows();
    switch (alpha.kind()) {
    case SpectralValue::Kind::Finite: {
        Matrix t = Rational(-(alpha.value() - op.mu)) * op.s;
        for (std::size_t i = 0; i < n; ++i) t.at(i, i) += 1;
        return t;
    }
    case SpectralValue::Kind::Infinity:
        return op.s;
    case SpectralValue::Kind::Orbit: {
        // q_alpha(alpha) with alpha = mu + 1/sigma: q_s(sigma) =
        // sum_k c_k sigma^k (mu sigma + 1 ... ) -- build sum_k c_k sigma^k
        // from q_alpha via sigma^d q_alpha(mu + 1/sigma).
        const UnivariatePoly& qa = alpha.minpoly();
        const int d = qa.degree();
        // numerator of qa(mu + 1/sigma) * sigma^d = sum_k c_k (mu sigma + 1)^k sigma^(d-k)
        UnivariatePoly acc;
        UnivariatePoly lin = UnivariatePoly::of({1, op.mu});  // 1 + mu*sigma
        std::vector<UnivariatePoly> linpow(static_cast<std::size_t>(d) + 1);
        linpow[0] = UnivariatePoly::constant(1);
        for (int k = 1; k <= d; ++k)
            linpow[static_cast<std::size_t>(k)] = linpow[static_cast<std::size_t>(k - 1)] * lin;
        for (int k = 0; k <= d; ++k) {
            // c_k (1 + mu sigma)^k sigma^(d-k)
            UnivariatePoly term = qa.coeff(static_cast<std::size_t>(k)) *
                                  linpow[static_cast<std::size_t>(k)];
            std::vector<Rational> sh(term.coeffs());
            sh.insert(sh.begin(), static_cast<std::size_t>(d - k), Rational(0));
            acc = acc + UnivariatePoly(std::move(sh));
        }
        return poly_at_matrix(acc.primitive(), op.s);
    }
    }
    return Matrix::identity(n);  // unreachable
}

Subspace left_kernel_space(const Matrix& m) {
    RrefResult r = rref(m);
    return Subspace::span(r.left_kernel, m.rows());
}

SpectralValue alpha_from_s_factor(const UnivariatePoly& q, const Rational& mu) {
    if (q.degree() == 1) {
        Rational sigma = -q.coeff(0) / q.coeff(1);
        if (sigma == 0) return SpectralValue::infinity();
        return SpectralValue::finite(mu + Rational(1) / sigma);
    }
    // alpha-polynomial: sum_k c_k (t - mu)^(d-k), from sigma = 1/(t - mu)
    const int d = q.degree();
    UnivariatePoly lin = UnivariatePoly::of({-mu, 1});
    std::vector<UnivariatePoly> pow(static_cast<std::size_t>(d) + 1);
    pow[0] = UnivariatePoly::constant(1);
    for (int k = 1; k <= d; ++k) pow[static_cast<std::size_t>(k)] = pow[static_cast<std::size_t>(k - 1)] * lin;
    UnivariatePoly acc;
    for (int k = 0; k <= d; ++k)
        acc = acc + q.coeff(static_cast<std::size_t>(k)) * pow[static_cast<std::size_t>(d - k)];
    return SpectralValue::orbit(acc.primitive());
}

bool spectral_less(const SpectralValue& a, const SpectralValue& b) {
    auto rank = [](const SpectralValue& v) {
        switch (v.kind()) {
        case SpectralValue::Kind::Finite: return 0;
        case SpectralValue::Kind::Orbit: return 1;
        case SpectralValue::Kind::Infinity: return 2;
        }
        return 3;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.kind() == SpectralValue::Kind::Finite) return a.value() < b.value();
    if (a.kind() == SpectralValue::Kind::Orbit) {
        const auto& ca = a.minpoly().coeffs();
        const auto& cb = b.minpoly().coeffs();
        if (ca.size() != cb.size()) return ca.size() < cb.size();
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    }
    return false;
}

}  // namespace

const SpectralBlock* Decomposition::block_at(const SpectralValue& alpha) const {
    for (const auto& b : blocks)
        if (b.alpha == alpha) return &b;
    return nullptr;
}

Subspace Decomposition::space_at(const SpectralValue& alpha, std::size_t ambient) const {
    const SpectralBlock* b = block_at(alpha);
    return b ? b->space : Subspace::zero(ambient);
}

PencilOperator pencil_operator(const Algebra& a, const Functional& f,
                               std::optional<Rational> mu) {
    EvaluatedPencil p = evaluate(a, f);
    if (det_pencil(p.m, p.mt).is_zero())
        throw Error(ErrorCode::DegeneratePencil,
                    "characteristic polynomial vanishes at this functional");
    Rational chosen;
    if (mu) {
        if (det_ff(shifted_pencil(p, *mu)) == 0)
            throw Error(ErrorCode::BadShift, "m - mu*mt is singular for the requested mu");
        chosen = *mu;
    } else {
        bool found = false;
        for (const Rational& candidate : kShiftSequence) {
            if (det_ff(shifted_pencil(p, candidate)) != 0) {
                chosen = candidate;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorCode::BadShift, "no admissible shift found in the prime sequence");
    }
    Matrix s = p.mt * inverse(shifted_pencil(p, chosen));
    return PencilOperator{chosen, std::move(s), std::move(p)};
}

Subspace jordan_space(const Algebra& a, const Functional& f, const SpectralValue& alpha,
                      int k, std::optional<Rational> mu) {
    if (k < 0) return Subspace::zero(a.dim());
    PencilOperator op = pencil_operator(a, f, mu);
    Matrix base = block_operator(op, alpha);
    return left_kernel_space(matrix_pow(base, static_cast<unsigned>(k) + 1));
}

Decomposition decompose(const Algebra& a, const Functional& f, std::optional<Rational> mu) {
    PencilOperator op = pencil_operator(a, f, mu);
    const std::size_t n = a.dim();

    UnivariatePoly mp = minimal_polynomial(op.s);
    PolyFactorization fac = factor_poly(mp);

    Decomposition out;
    out.functional = f;
    out.mu_used = op.mu;

    for (const auto& [q, mult] : fac.factors) {
        SpectralValue alpha = alpha_from_s_factor(q, op.mu);
        Matrix base = block_operator(op, alpha);
        SpectralBlock block;
        block.alpha = alpha;
        Matrix power = Matrix::identity(n);
        Subspace prev = Subspace::zero(n);
        for (int k = 0;; ++k) {
            power = power * base;
            Subspace vk = left_kernel_space(power);
            block.chain_dims.push_back(vk.dim());
            if (vk == prev && k > 0) {
                block.chain_dims.pop_back();
                break;
            }
            block.space = vk;
            prev = vk;
            if (k > static_cast<int>(n) + 1)
                throw Error(ErrorCode::DegeneratePencil, "jordan chain failed to stabilize");
        }
        out.blocks.push_back(std::move(block));
    }

    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const SpectralBlock& x, const SpectralBlock& y) {
                  return spectral_less(x.alpha, y.alpha);
              });

    std::size_t total = 0;
    for (const auto& b : out.blocks) total += b.space.dim();
    if (total != n)
        throw Error(ErrorCode::DegeneratePencil, "spectral blocks do not fill the algebra");
    return out;
}

bool VnReport::all_pass() const {
    for (const auto& c : checks)
        if (c.applicable && c.required && !c.pass) return false;
    return true;
}

const CheckResult* VnReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::string subspace_dims(const Decomposition& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (i) os << ", ";
        os << d.blocks[i].alpha.str() << ":" << d.blocks[i].space.dim();
    }
    return os.str();
}

}  // namespace

VnReport verify_vn(const Algebra& a, const Functional& f) {
    VnReport report;
    report.decomposition = decompose(a, f);
    const Decomposition& dec = report.decomposition;
    const std::size_t n = a.dim();
    const bool unital = find_unity(a).has_value();

    // (1) direct sum
    {
        CheckResult c{"direct_sum"};
        std::size_t total = 0;
        for (const auto& b : dec.blocks) total += b.space.dim();
        Matrix stacked(total, n);
        std::size_t r = 0;
        for (const auto& b : dec.blocks)
            for (std::size_t i = 0; i < b.space.dim(); ++i)
                stacked.set_row(r++, b.space.basis_row(i));
        c.pass = (total == n) && (rref(stacked).rank == n);
        c.detail = "blocks " + subspace_dims(dec);
        report.checks.push_back(std::move(c));
    }

    // (2) dim V(alpha) == dim V(1/alpha)
    {
        CheckResult c{"reciprocal_dims"};
        c.pass = true;
        for (const auto& b : dec.blocks) {
            const SpectralBlock* rec = dec.block_at(b.alpha.reciprocal());
            std::size_t rd = rec ? rec->space.dim() : 0;
            if (rd != b.space.dim()) {
                c.pass = false;
                c.detail = "dim V(" + b.alpha.str() + ") = " + std::to_string(b.space.dim()) +
                           " but dim V(" + b.alpha.reciprocal().str() + ") = " +
                           std::to_string(rd);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (3) F(V_k(alpha)) = 0 for alpha != 1 (unital only)
    {
        CheckResult c{"functional_vanishes"};
        c.applicable = unital;
        c.pass = true;
        if (unital) {
            for (const auto& b : dec.blocks) {
                if (b.alpha == SpectralValue::finite(1)) continue;
                for (std::size_t i = 0; i < b.space.dim(); ++i) {
                    if (f.apply(Element{b.space.basis_row(i)}) != 0) {
                        c.pass = false;
                        c.detail = "F does not vanish on V(" + b.alpha.str() + ")";
                    }
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (4) block products; the unconstrained V(inf)*V(0) entry is observed only
    {
        CheckResult c{"block_products"};
        c.pass = true;
        const SpectralValue zero = SpectralValue::finite(0);
        const SpectralValue one = SpectralValue::finite(1);
        const SpectralValue inf = SpectralValue::infinity();
        auto fail = [&](const SpectralValue& x, const SpectralValue& y, const std::string& tgt) {
            c.pass = false;
            if (!c.detail.empty()) c.detail += "; ";
            c.detail += "V(" + x.str() + ")*V(" + y.str() + ") not inside " + tgt;
        };
        for (const auto& bx : dec.blocks)
            for (const auto& by : dec.blocks) {
                Subspace prod = subspace_product(a, bx.space, by.space);
                const SpectralValue& x = bx.alpha;
                const SpectralValue& y = by.alpha;
                if (x.is_infinity() && y == zero) continue;  // the starred entry
                if (x.is_finite() && y.is_finite()) {
                    SpectralValue target = SpectralValue::finite(x.value() * y.value());
                    if (!dec.space_at(target, n).contains(prod))
                        fail(x, y, "V(" + target.str() + ")");
                } else if (x.is_orbit() || y.is_orbit()) {
                    const SpectralValue& orb = x.is_orbit() ? x : y;
                    const SpectralValue& other = x.is_orbit() ? y : x;
                    if (other.is_orbit()) continue;  // orbit x orbit: granularity too coarse
                    Subspace target = Subspace::zero(n);
                    if (other == zero) target = dec.space_at(zero, n);
                    else if (other == one) target = dec.space_at(orb, n);
                    else if (other.is_infinity()) target = dec.space_at(inf, n);
                    else continue;  // rational*irrational: another orbit, skip
                    if (!target.contains(prod))
                        fail(x, y, other == one ? "the same orbit block" : "V(" + other.str() + ")");
                } else {
                    // at least one infinity, product lands in V(inf) unless killed
                    if (x == zero && y.is_infinity()) {
                        if (!prod.is_zero()) fail(x, y, "{0}");
                    } else if (!dec.space_at(inf, n).contains(prod)) {
                        fail(x, y, "V(inf)");
                    }
                }
            }
        // Stab-level variants
        EvaluatedPencil p = evaluate(a, f);
        Subspace s0 = stabilizer(p, zero);
        Subspace sinf = stabilizer(p, inf);
        Subspace nil_f = intersect(s0, sinf);
        if (!nil_f.contains(subspace_product(a, s0, sinf))) fail(zero, inf, "Nil");
        for (const auto& bx : dec.blocks)
            for (const auto& by : dec.blocks) {
                if (!bx.alpha.is_finite() || !by.alpha.is_finite()) continue;
                Subspace sp = subspace_product(a, stabilizer(p, bx.alpha), stabilizer(p, by.alpha));
                if (!stabilizer(p, SpectralValue::finite(bx.alpha.value() * by.alpha.value()))
                         .contains(sp))
                    fail(bx.alpha, by.alpha, "Stab of the product");
            }
        report.checks.push_back(std::move(c));
    }

    // observation: the starred V(inf)*V(0) product
    {
        CheckResult c{"inf_times_zero_observed"};
        c.required = false;
        const Subspace vinf = dec.space_at(SpectralValue::infinity(), n);
        const Subspace v0 = dec.space_at(SpectralValue::finite(0), n);
        Subspace prod = subspace_product(a, vinf, v0);
        c.pass = true;
        c.detail = "dim V(inf)*V(0) = " + std::to_string(prod.dim());
        report.checks.push_back(std::move(c));
    }

    // (5) V(0), V(1), V(inf) closed under multiplication
    {
        CheckResult c{"spectral_closure"};
        c.pass = true;
        for (const SpectralValue& v :
             {SpectralValue::finite(0), SpectralValue::finite(1), SpectralValue::infinity()}) {
            Subspace s = dec.space_at(v, n);
            if (!s.contains(subspace_product(a, s, s))) {
                c.pass = false;
                c.detail = "V(" + v.str() + ") is not closed";
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (6) solvability: V(1) required, V(0) reported
    {
        CheckResult c{"v1_solvable"};
        Subspace v1 = dec.space_at(SpectralValue::finite(1), n);
        c.pass = is_solvable(a, v1).solvable;
        report.checks.push_back(std::move(c));

        CheckResult o{"v0_solvable"};
        o.required = false;
        Subspace v0 = dec.space_at(SpectralValue::finite(0), n);
        o.pass = is_solvable(a, v0).solvable;
        o.detail = o.pass ? "V(0) solvable" : "V(0) not solvable";
        report.checks.push_back(std::move(o));
    }

    // (7) factor multiplicities match block dimensions
    {
        CheckResult c{"factor_multiplicity"};
        c.pass = true;
        CharPencil cp = charpoly(a, f);
        const FactoredForm& ff = *cp.factored;  // decompose succeeded, so chi != 0
        for (const auto& b : dec.blocks) {
            std::size_t expected = b.space.dim();
            std::size_t got = 0;
            switch (b.alpha.kind()) {
            case SpectralValue::Kind::Finite:
                got = static_cast<std::size_t>(b.alpha.value() == 0
                                                   ? ff.mult_mu
                                                   : ff.multiplicity_of(b.alpha.value()));
                break;
            case SpectralValue::Kind::Infinity:
                got = static_cast<std::size_t>(ff.mult_lambda);
                break;
            case SpectralValue::Kind::Orbit:
                got = static_cast<std::size_t>(ff.multiplicity_of_orbit(b.alpha.minpoly())) *
                      static_cast<std::size_t>(b.alpha.minpoly().degree());
                break;
            }
            if (expected != got) {
                c.pass = false;
                c.detail = "block V(" + b.alpha.str() + ") has dim " + std::to_string(expected) +
                           " but chi multiplicity " + std::to_string(got);
            }
        }
        report.checks.push_back(std::move(c));
    }

    // (8) mu independence: recompute at a second admissible shift
    {
        CheckResult c{"mu_independence"};
        c.pass = true;
        EvaluatedPencil p = evaluate(a, f);
        std::optional<Rational> second;
        for (const Rational& candidate : kShiftSequence) {
            if (candidate == dec.mu_used) continue;
            if (det_ff(shifted_pencil(p, candidate)) != 0) {
                second = candidate;
                break;
            }
        }
        if (!second) {
            c.applicable = false;
            c.detail = "no second admissible shift in the sequence";
        } else {
            Decomposition other = decompose(a, f, *second);
            if (other.blocks.size() != dec.blocks.size()) c.pass = false;
            for (const auto& b : dec.blocks) {
                const SpectralBlock* ob = other.block_at(b.alpha);
                if (!ob || !(ob->space == b.space) || ob->chain_dims != b.chain_dims) {
                    c.pass = false;
                    c.detail = "block V(" + b.alpha.str() + ") differs at mu = " +
                               rational_str(*second);
                }
            }
        }
        report.checks.push_back(std::move(c));
    }

    return report;
}

UOperator u_operator(const Algebra& a, const Functional& f, const Rational& alpha) {
    if (alpha == 0 || alpha == 1)
        throw Error(ErrorCode::InvalidAlpha, "u_operator needs alpha outside {0,1,inf}");
    Decomposition dec = decompose(a, f);
    const SpectralBlock* va = dec.block_at(SpectralValue::finite(alpha));
    const SpectralBlock* vb = dec.block_at(SpectralValue::finite(Rational(1) / alpha));
    if (!va || !vb)
        throw Error(ErrorCode::MissingBlock, "no spectral block at alpha or 1/alpha");
    if (va->space.dim() != vb->space.dim())
        throw Error(ErrorCode::MissingBlock, "blocks at alpha and 1/alpha differ in dimension");
    const std::size_t d = va->space.dim();

    Matrix pairing(d, d);   // P_ij = F(a_i b_j)
    Matrix reversed(d, d);  // R_jk = F(b_j a_k)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Element ai{va->space.basis_row(i)}, bj{vb->space.basis_row(j)};
            pairing.at(i, j) = f.apply(a.multiply(ai, bj));
            reversed.at(j, i) = f.apply(a.multiply(bj, ai));
        }
    Matrix rt = reversed.transpose();
    if (det_ff(rt) == 0)
        throw Error(ErrorCode::SingularPairing,
                    "the pairing F(ba) between V(alpha) and V(1/alpha) is singular");
    Matrix u = pairing * inverse(rt);

    // sole eigenvalue alpha, exactly
    Matrix shifted = u;
    for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) -= alpha;
    if (!matrix_pow(shifted, static_cast<unsigned>(d)).is_zero())
        throw Error(ErrorCode::SingularPairing, "(U - alpha I)^dim != 0");

    // chain compatibility: (U - alpha I) V_k inside V_{k-1}
    Subspace prev = Subspace::zero(a.dim());
    for (int k = 0; k < static_cast<int>(d); ++k) {
        Subspace vk = jordan_space(a, f, SpectralValue::finite(alpha), k);
        for (std::size_t r = 0; r < vk.dim(); ++r) {
            // coords of the basis vector inside V_N(alpha): solve c * basis = amb
            std::vector<Rational> amb = vk.basis_row(r);
            Matrix aug(a.dim(), d + 1);
            for (std::size_t e = 0; e < a.dim(); ++e) {
                for (std::size_t v = 0; v < d; ++v) aug.at(e, v) = va->space.basis().at(v, e);
                aug.at(e, d) = amb[e];
            }
            RrefResult rr = rref(aug);
            std::vector<Rational> coords(d);
            for (std::size_t row = 0; row < rr.rank; ++row) {
                if (rr.pivot_cols[row] < d)
                    coords[rr.pivot_cols[row]] = rr.reduced.at(row, d);
            }
            std::vector<Rational> moved = row_times(coords, shifted);
            std::vector<Rational> ambient_moved = row_times(moved, va->space.basis());
            if (!prev.contains(ambient_moved))
                throw Error(ErrorCode::SingularPairing,
                            "(U - alpha I) does not respect the jordan chain");
        }
        if (vk == va->space) break;
        prev = vk;
    }

    return UOperator{std::move(u), alpha, va->space};
}

BlockCharpolyResult block_charpoly_check(const Algebra& a, const Functional& f) {
    Decomposition dec = decompose(a, f);
    const std::size_t n = a.dim();
    BlockCharpolyResult out;

    // group blocks: {0, inf} together, {1} alone, reciprocal pairs once
    std::vector<std::vector<const SpectralBlock*>> groups;
    std::vector<const SpectralBlock*> seen;
    auto mark = [&](const SpectralBlock* b) { seen.push_back(b); };
    auto is_seen = [&](const SpectralBlock* b) {
        return std::find(seen.begin(), seen.end(), b) != seen.end();
    };
    const SpectralBlock* b0 = dec.block_at(SpectralValue::finite(0));
    const SpectralBlock* binf = dec.block_at(SpectralValue::infinity());
    if (b0 || binf) {
        std::vector<const SpectralBlock*> g;
        if (binf) { g.push_back(binf); mark(binf); }
        if (b0) { g.push_back(b0); mark(b0); }
        groups.push_back(g);
    }
    for (const auto& b : dec.blocks) {
        if (is_seen(&b)) continue;
        const SpectralBlock* partner = dec.block_at(b.alpha.reciprocal());
        std::vector<const SpectralBlock*> g{&b};
        mark(&b);
        if (partner && partner != &b && !is_seen(partner)) {
            g.push_back(partner);
            mark(partner);
        }
        groups.push_back(g);
    }

    BinaryForm assembled(0, {Rational(1)});
    for (const auto& g : groups) {
        std::size_t total = 0;
        for (const auto* b : g) total += b->space.dim();
        Matrix rows(total, n);
        std::size_t r = 0;
        for (const auto* b : g)
            for (std::size_t i = 0; i < b->space.dim(); ++i)
                rows.set_row(r++, b->space.basis_row(i));
        // restricted pencil: entries F(w_i w_j)
        Matrix restricted(total, total);
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = 0; j < total; ++j)
                restricted.at(i, j) =
                    f.apply(a.multiply(Element{rows.row(i)}, Element{rows.row(j)}));
        assembled = assembled * det_pencil(restricted, restricted.transpose());

        // constituent pairings must be invertible
        if (g.size() == 2) {
            const std::size_t d1 = g[0]->space.dim(), d2 = g[1]->space.dim();
            if (d1 != d2) {
                out.pairing_failures.push_back("blocks " + g[0]->alpha.str() + " and " +
                                               g[1]->alpha.str() + " differ in dimension");
            } else {
                Matrix pair(d1, d1);
                for (std::size_t i = 0; i < d1; ++i)
                    for (std::size_t j = 0; j < d1; ++j)
                        pair.at(i, j) = f.apply(a.multiply(Element{g[0]->space.basis_row(i)},
                                                           Element{g[1]->space.basis_row(j)}));
                if (det_ff(pair) == 0)
                    out.pairing_failures.push_back("singular pairing between V(" +
                                                   g[0]->alpha.str() + ") and V(" +
                                                   g[1]->alpha.str() + ")");
            }
        } else {
            // single block: alpha = 1 (Q_F) or a self-reciprocal value/orbit
            const std::size_t d = g[0]->space.dim();
            Matrix gram(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    gram.at(i, j) = f.apply(a.multiply(Element{g[0]->space.basis_row(i)},
                                                       Element{g[0]->space.basis_row(j)}));
            if (det_ff(gram) == 0)
                out.pairing_failures.push_back("singular form on V(" + g[0]->alpha.str() + ")");
        }
    }

    out.assembled = assembled;
    CharPencil cp = charpoly(a, f);
    out.pass = out.pairing_failures.empty();
    if (assembled.degree() != cp.chi.degree() || assembled.is_zero()) {
        out.pass = false;
        return out;
    }
    // chi == constant * assembled
    std::size_t k = 0;
    while (assembled.coeff(k) == 0 && k < assembled.coeffs().size()) ++k;
    out.constant = cp.chi.coeff(k) / assembled.coeff(k);
    if (out.constant == 0 || !(cp.chi == out.constant * assembled)) out.pass = false;
    return out;
}

bool phi_ideal_check(const Algebra& a, const Functional& f, const SpectralValue& alpha) {
    if (alpha == SpectralValue::finite(0) || alpha.is_infinity())
        throw Error(ErrorCode::InvalidAlpha, "phi_ideal_check needs alpha outside {0,inf}");
    Decomposition dec = decompose(a, f);
    const SpectralBlock* va = dec.block_at(alpha);
    const SpectralBlock* vb = dec.block_at(alpha.reciprocal());
    if (!va || !vb)
        throw Error(ErrorCode::MissingBlock, "no spectral block at alpha or 1/alpha");
    Subspace image = subspace_product(a, va->space, vb->space);
    Subspace v1 = dec.space_at(SpectralValue::finite(1), a.dim());
    return image.contains(subspace_product(a, v1, image)) &&
           image.contains(subspace_product(a, image, v1));
}

}  // namespace algpencil
