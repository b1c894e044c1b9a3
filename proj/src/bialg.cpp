#include "algpencil/bialg.hpp"

#include <algorithm>
#include <sstream>

#include "algpencil/errors.hpp"

namespace algpencil {

namespace {

std::vector<std::string> part_names(std::size_t h, const std::string& stem) {
    std::vector<std::string> names;
    if (h == 1) {
        names.push_back(stem);
        return names;
    }
    for (std::size_t i = 0; i < h; ++i) names.push_back(stem + std::to_string(i + 1));
    return names;
}

// coordinates of an ambient row vector in a row basis (must be consistent)
std::vector<Rational> coords_in_rows(const Matrix& rows, const std::vector<Rational>& v) {
    const std::size_t d = rows.rows(), n = rows.cols();
    Matrix aug(n, d + 1);
    for (std::size_t e = 0; e < n; ++e) {
        for (std::size_t b = 0; b < d; ++b) aug.at(e, b) = rows.at(b, e);
        aug.at(e, d) = v[e];
    }
    RrefResult r = rref(aug);
    std::vector<Rational> out(d);
    for (std::size_t row = 0; row < r.rank; ++row) {
        if (r.pivot_cols[row] == d)
            throw Error(ErrorCode::DimensionMismatch, "vector outside the expected subspace");
        out[r.pivot_cols[row]] = r.reduced.at(row, d);
    }
    return out;
}

Algebra table_on_subspace(const Algebra& a, const Matrix& rows, const std::string& stem) {
    const std::size_t d = rows.rows();
    std::vector<Rational> table(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Element prod = a.multiply(Element{rows.row(i)}, Element{rows.row(j)});
            std::vector<Rational> c = coords_in_rows(rows, prod.coords);
            for (std::size_t k = 0; k < d; ++k) table[(i * d + j) * d + k] = c[k];
        }
    return Algebra(part_names(d, stem), std::move(table));
}

struct Maps {
    const SplitData& s;

    Rational pair(const Element& x, const Element& y) const {
        Rational acc = 0;
        for (std::size_t i = 0; i < s.h; ++i)
            for (std::size_t j = 0; j < s.h; ++j)
                acc += x.coords[i] * s.pairing.at(i, j) * y.coords[j];
        return acc;
    }
    Rational a_of(const Element& y, const Element& x) const { return pair(x, y); }
    Element b_of(const Element& y, const Element& x) const {
        Element acc{std::vector<Rational>(s.h)};
        for (std::size_t i = 0; i < s.h; ++i)
            for (std::size_t j = 0; j < s.h; ++j) {
                Rational f = y.coords[i] * x.coords[j];
                if (f == 0) continue;
                acc = acc + f * s.b_tensor[i][j];
            }
        return acc;
    }
    Element c_of(const Element& y, const Element& x) const {
        Element acc{std::vector<Rational>(s.h)};
        for (std::size_t i = 0; i < s.h; ++i)
            for (std::size_t j = 0; j < s.h; ++j) {
                Rational f = y.coords[i] * x.coords[j];
                if (f == 0) continue;
                acc = acc + f * s.c_tensor[i][j];
            }
        return acc;
    }
    Element mul_h(const Element& x1, const Element& x2) const {
        return s.h_algebra.multiply(x1, x2);
    }
    Element mul_hp(const Element& y1, const Element& y2) const {
        return s.hprime_algebra.multiply(y1, y2);
    }
    // <B_L(y1, x), y2> = <x, y1 y2>
    Element b_left(const Element& y1, const Element& x) const {
        std::vector<Rational> w(s.h);
        for (std::size_t k = 0; k < s.h; ++k)
            w[k] = pair(x, mul_hp(y1, basis(k)));
        return solve_left_pairing(w);
    }
    // <x1, C_R(y, x2)> = <x1 x2, y>
    Element c_right(const Element& y, const Element& x2) const {
        std::vector<Rational> v(s.h);
        for (std::size_t k = 0; k < s.h; ++k)
            v[k] = pair(mul_h(basis(k), x2), y);
        return solve_right_pairing(v);
    }

    Element basis(std::size_t k) const {
        Element e{std::vector<Rational>(s.h)};
        e.coords[k] = 1;
        return e;
    }
    // b with <b, y_k> = w_k, i.e. G^T b = w
    Element solve_left_pairing(const std::vector<Rational>& w) const {
        Matrix aug(s.h, s.h + 1);
        for (std::size_t k = 0; k < s.h; ++k) {
            for (std::size_t m = 0; m < s.h; ++m) aug.at(k, m) = s.pairing.at(m, k);
            aug.at(k, s.h) = w[k];
        }
        return Element{solve_square(aug)};
    }
    // c with <x_k, c> = v_k, i.e. G c = v
    Element solve_right_pairing(const std::vector<Rational>& v) const {
        Matrix aug(s.h, s.h + 1);
        for (std::size_t k = 0; k < s.h; ++k) {
            for (std::size_t m = 0; m < s.h; ++m) aug.at(k, m) = s.pairing.at(k, m);
            aug.at(k, s.h) = v[k];
        }
        return Element{solve_square(aug)};
    }
    static std::vector<Rational> solve_square(Matrix aug) {
        const std::size_t d = aug.rows();
        RrefResult r = rref(aug);
        if (r.rank != d)
            throw Error(ErrorCode::SingularPairing, "pairing system is singular");
        std::vector<Rational> out(d);
        for (std::size_t row = 0; row < d; ++row) out[row] = r.reduced.at(row, d);
        return out;
    }
};

std::string tuple_str(std::initializer_list<std::size_t> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) os << ",";
        os << i + 1;
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace

bool IdentityReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

const IdentityReport::Entry* IdentityReport::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<std::string> IdentityReport::failing() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
        if (!e.pass) out.push_back(e.name);
    return out;
}

SplitData split_data_from_parts(const Algebra& h_algebra, const Algebra& hprime_algebra,
                                const Matrix& pairing) {
    const std::size_t h = h_algebra.dim();
    if (hprime_algebra.dim() != h || pairing.rows() != h || pairing.cols() != h)
        throw Error(ErrorCode::DimensionMismatch, "dual pair dimensions disagree");
    if (h > 0 && det_ff(pairing) == 0)
        throw Error(ErrorCode::SingularPairing, "the pairing matrix is singular");

    SplitData s;
    s.h = h;
    s.h_algebra = h_algebra;
    s.hprime_algebra = hprime_algebra;
    s.pairing = pairing;
    s.a_scalar = pairing.transpose();
    Maps maps{s};
    s.b_tensor.assign(h, std::vector<Element>(h));
    s.c_tensor.assign(h, std::vector<Element>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            // <B(y_i, x_j), y_k> = <x_j, y_k y_i>
            std::vector<Rational> w(h);
            for (std::size_t k = 0; k < h; ++k)
                w[k] = maps.pair(maps.basis(j), maps.mul_hp(maps.basis(k), maps.basis(i)));
            s.b_tensor[i][j] = maps.solve_left_pairing(w);
            // <x_k, C(y_i, x_j)> = <x_j x_k, y_i>
            std::vector<Rational> v(h);
            for (std::size_t k = 0; k < h; ++k)
                v[k] = maps.pair(maps.mul_h(maps.basis(j), maps.basis(k)), maps.basis(i));
            s.c_tensor[i][j] = maps.solve_right_pairing(v);
        }
    return s;
}

SplitData split(const Algebra& a, const Functional& f) {
    if (!find_unity(a)) throw Error(ErrorCode::NoUnity, "split needs a unital algebra");
    Element unity = *find_unity(a);

    Decomposition dec = decompose(a, f);  // DegeneratePencil propagates
    const std::size_t n = a.dim();
    const SpectralValue zero = SpectralValue::finite(0);
    const SpectralValue one = SpectralValue::finite(1);
    const SpectralValue inf = SpectralValue::infinity();
    for (const auto& b : dec.blocks)
        if (!(b.alpha == zero || b.alpha == one || b.alpha == inf))
            throw Error(ErrorCode::NotIndexOne,
                        "spectral block outside {0,1,inf} at alpha = " + b.alpha.str());
    Subspace v1 = dec.space_at(one, n);
    if (v1.dim() != 1)
        throw Error(ErrorCode::NotIndexOne,
                    "dim V(1) = " + std::to_string(v1.dim()) + ", expected 1");
    Subspace v0 = dec.space_at(zero, n);
    Subspace vinf = dec.space_at(inf, n);
    const std::size_t h = v0.dim();

    // normalize F(1) = 1 (F cannot vanish on V(1) when chi is nonzero)
    Functional nf = f;
    Rational f1 = nf.apply(unity);
    if (f1 == 0) throw Error(ErrorCode::NotIndexOne, "functional vanishes on the unity");
    for (auto& v : nf.values) v /= f1;

    // x-basis from V(0); y-basis from V(inf), normalized so <x_i,y_j> = id
    Matrix xrows = v0.basis();
    Matrix y0rows = vinf.basis();
    Matrix g0(h, h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            g0.at(i, j) = -nf.apply(a.multiply(Element{y0rows.row(j)}, Element{xrows.row(i)}));
    if (h > 0 && det_ff(g0) == 0)
        throw Error(ErrorCode::SingularPairing, "the duality A(y,x) is singular");
    Matrix yrows = h > 0 ? inverse(g0).transpose() * y0rows : y0rows;

    SplitData s;
    s.h = h;
    s.functional = nf;
    s.adapted_basis = Matrix(n, n);
    for (std::size_t i = 0; i < h; ++i) s.adapted_basis.set_row(i, xrows.row(i));
    s.adapted_basis.set_row(h, unity.coords);
    for (std::size_t i = 0; i < h; ++i) s.adapted_basis.set_row(h + 1 + i, yrows.row(i));

    s.h_algebra = table_on_subspace(a, xrows, "x");
    s.hprime_algebra = table_on_subspace(a, yrows, "y");

    s.pairing = Matrix(h, h);
    s.a_scalar = Matrix(h, h);
    Matrix adapted_inv = inverse(s.adapted_basis);
    s.b_tensor.assign(h, std::vector<Element>(h));
    s.c_tensor.assign(h, std::vector<Element>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            s.pairing.at(i, j) =
                -nf.apply(a.multiply(Element{yrows.row(j)}, Element{xrows.row(i)}));
            // y_i x_j = -A.1 + B + C in the adapted basis
            Element prod = a.multiply(Element{yrows.row(i)}, Element{xrows.row(j)});
            std::vector<Rational> c = row_times(prod.coords, adapted_inv);
            s.a_scalar.at(i, j) = -c[h];
            Element b{std::vector<Rational>(h)}, cc{std::vector<Rational>(h)};
            for (std::size_t k = 0; k < h; ++k) {
                b.coords[k] = c[k];
                cc.coords[k] = c[h + 1 + k];
            }
            s.b_tensor[i][j] = b;
            s.c_tensor[i][j] = cc;
            // x y = 0 in this configuration
            Element xy = a.multiply(Element{xrows.row(j)}, Element{yrows.row(i)});
            if (!xy.is_zero())
                throw Error(ErrorCode::NotIndexOne, "x*y does not vanish; split invalid");
        }
    return s;
}

namespace {

struct IdentityContext {
    const SplitData& s;
    Maps maps;

    explicit IdentityContext(const SplitData& data) : s(data), maps{data} {}

    bool elements_equal(const Element& a, const Element& b) const { return a == b; }

    Element bracket_h(const Element& a, const Element& b) const {
        return maps.mul_h(a, b) - maps.mul_h(b, a);
    }
    Element bracket_hp(const Element& a, const Element& b) const {
        return maps.mul_hp(a, b) - maps.mul_hp(b, a);
    }
};

// evaluates homo_eqn2 with the four corner maps supplied, so the x<->y
// transposed world can reuse it
bool homo_eqn2_holds(const Maps& maps, std::size_t h, std::string* witness) {
    for (std::size_t x1 = 0; x1 < h; ++x1)
        for (std::size_t x2 = 0; x2 < h; ++x2)
            for (std::size_t y1 = 0; y1 < h; ++y1)
                for (std::size_t y2 = 0; y2 < h; ++y2) {
                    Element ex1 = maps.basis(x1), ex2 = maps.basis(x2);
                    Element ey1 = maps.basis(y1), ey2 = maps.basis(y2);
                    Rational lhs = maps.pair(maps.mul_h(ex1, ex2), maps.mul_hp(ey1, ey2)) +
                                   maps.pair(ex1, ey1) * maps.pair(ex2, ey2);
                    Rational rhs = maps.pair(maps.b_left(ey1, ex2), maps.c_of(ey2, ex1)) +
                                   maps.pair(maps.b_of(ey2, ex1), maps.c_right(ey1, ex2));
                    if (lhs != rhs) {
                        if (witness) *witness = tuple_str({x1, x2, y1, y2});
                        return false;
                    }
                }
    return true;
}

// the transposed-world split data: H and H' change places, the pairing is
// transposed, and B/C are rebuilt from the dualities
SplitData transposed_world(const SplitData& s) {
    return split_data_from_parts(s.hprime_algebra, s.h_algebra, s.pairing.transpose());
}

}  // namespace

IdentityReport check_identities(const SplitData& s) {
    IdentityReport report;
    IdentityContext ctx(s);
    const Maps& m = ctx.maps;
    const std::size_t h = s.h;

    auto add = [&](const std::string& name, bool pass, const std::string& witness) {
        report.entries.push_back({name, pass, pass ? "" : witness});
    };

    // a_b: x1 B(y,x2) = A(y,x2) x1
    {
        bool pass = true;
        std::string witness;
        for (std::size_t x1 = 0; x1 < h && pass; ++x1)
            for (std::size_t y = 0; y < h && pass; ++y)
                for (std::size_t x2 = 0; x2 < h && pass; ++x2) {
                    Element lhs = m.mul_h(m.basis(x1), m.b_of(m.basis(y), m.basis(x2)));
                    Element rhs = m.a_of(m.basis(y), m.basis(x2)) * m.basis(x1);
                    if (!(lhs == rhs)) {
                        pass = false;
                        witness = tuple_str({x1, y, x2});
                    }
                }
        add("a_b", pass, witness);
    }
    // a_c: C(y1,x) y2 = A(y1,x) y2
    {
        bool pass = true;
        std::string witness;
        for (std::size_t y1 = 0; y1 < h && pass; ++y1)
            for (std::size_t x = 0; x < h && pass; ++x)
                for (std::size_t y2 = 0; y2 < h && pass; ++y2) {
                    Element lhs = m.mul_hp(m.c_of(m.basis(y1), m.basis(x)), m.basis(y2));
                    Element rhs = m.a_of(m.basis(y1), m.basis(x)) * m.basis(y2);
                    if (!(lhs == rhs)) {
                        pass = false;
                        witness = tuple_str({y1, x, y2});
                    }
                }
        add("a_c", pass, witness);
    }
    // a_x: A(y, x1 x2) = A(C(y,x1), x2)
    auto a_lin = [&](const Element& y, const Element& x) {
        Rational acc = 0;
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j)
                acc += y.coords[i] * x.coords[j] * s.a_scalar.at(i, j);
        return acc;
    };
    {
        bool pass = true;
        std::string witness;
        for (std::size_t y = 0; y < h && pass; ++y)
            for (std::size_t x1 = 0; x1 < h && pass; ++x1)
                for (std::size_t x2 = 0; x2 < h && pass; ++x2) {
                    Rational lhs = a_lin(m.basis(y), m.mul_h(m.basis(x1), m.basis(x2)));
                    Rational rhs = a_lin(m.c_of(m.basis(y), m.basis(x1)), m.basis(x2));
                    if (lhs != rhs) {
                        pass = false;
                        witness = tuple_str({y, x1, x2});
                    }
                }
        add("a_x", pass, witness);
    }
    // b_x: B(y, x1 x2) = B(C(y,x1), x2) + [B(y,x1), x2]
    {
        bool pass = true;
        std::string witness;
        for (std::size_t y = 0; y < h && pass; ++y)
            for (std::size_t x1 = 0; x1 < h && pass; ++x1)
                for (std::size_t x2 = 0; x2 < h && pass; ++x2) {
                    Element lhs = m.b_of(m.basis(y), m.mul_h(m.basis(x1), m.basis(x2)));
                    Element rhs = m.b_of(m.c_of(m.basis(y), m.basis(x1)), m.basis(x2)) +
                                  ctx.bracket_h(m.b_of(m.basis(y), m.basis(x1)), m.basis(x2));
                    if (!(lhs == rhs)) {
                        pass = false;
                        witness = tuple_str({y, x1, x2});
                    }
                }
        add("b_x", pass, witness);
    }
    // c_x: C(y, x1 x2) = C(C(y,x1), x2)
    {
        bool pass = true;
        std::string witness;
        for (std::size_t y = 0; y < h && pass; ++y)
            for (std::size_t x1 = 0; x1 < h && pass; ++x1)
                for (std::size_t x2 = 0; x2 < h && pass; ++x2) {
                    Element lhs = m.c_of(m.basis(y), m.mul_h(m.basis(x1), m.basis(x2)));
                    Element rhs = m.c_of(m.c_of(m.basis(y), m.basis(x1)), m.basis(x2));
                    if (!(lhs == rhs)) {
                        pass = false;
                        witness = tuple_str({y, x1, x2});
                    }
                }
        add("c_x", pass, witness);
    }
    // a_y: A(y1 y2, x) = A(y1, B(y2,x))
    {
        bool pass = true;
        std::string witness;
        for (std::size_t y1 = 0; y1 < h && pass; ++y1)
            for (std::size_t y2 = 0; y2 < h && pass; ++y2)
                for (std::size_t x = 0; x < h && pass; ++x) {
                    Rational lhs = a_lin(m.mul_hp(m.basis(y1), m.basis(y2)), m.basis(x));
                    Rational rhs = a_lin(m.basis(y1), m.b_of(m.basis(y2), m.basis(x)));
                    if (lhs != rhs) {
                        pass = false;
                        witness = tuple_str({y1, y2, x});
                    }
                }
        add("a_y", pass, witness);
    }
    // b_y: B(y1 y2, x) = B(y1, B(y2, x))
    {
        bool pass = true;
        std::string witness;
        for (std::size_t y1 = 0; y1 < h && pass; ++y1)
            for (std::size_t y2 = 0; y2 < h && pass; ++y2)
                for (std::size_t x = 0; x < h && pass; ++x) {
                    Element lhs = m.b_of(m.mul_hp(m.basis(y1), m.basis(y2)), m.basis(x));
                    Element rhs = m.b_of(m.basis(y1), m.b_of(m.basis(y2), m.basis(x)));
                    if (!(lhs == rhs)) {
                        pass = false;
                        witness = tuple_str({y1, y2, x});
                    }
                }
        add("b_y", pass, witness);
    }
    // c_y: C(y1 y2, x) = C(y1, B(y2,x)) + [y1, C(y2,x)]
    {
        bool pass = true;
        std::string witness;
        for (std::size_t y1 = 0; y1 < h && pass; ++y1)
            for (std::size_t y2 = 0; y2 < h && pass; ++y2)
                for (std::size_t x = 0; x < h && pass; ++x) {
                    Element lhs = m.c_of(m.mul_hp(m.basis(y1), m.basis(y2)), m.basis(x));
                    Element rhs = m.c_of(m.basis(y1), m.b_of(m.basis(y2), m.basis(x))) +
                                  ctx.bracket_hp(m.basis(y1), m.c_of(m.basis(y2), m.basis(x)));
                    if (!(lhs == rhs)) {
                        pass = false;
                        witness = tuple_str({y1, y2, x});
                    }
                }
        add("c_y", pass, witness);
    }
    // rank1_eqn: <x1,y1><x2,y2> = <B(y1,x1), C(y2,x2)>
    {
        bool pass = true;
        std::string witness;
        for (std::size_t x1 = 0; x1 < h && pass; ++x1)
            for (std::size_t y1 = 0; y1 < h && pass; ++y1)
                for (std::size_t x2 = 0; x2 < h && pass; ++x2)
                    for (std::size_t y2 = 0; y2 < h; ++y2) {
                        Rational lhs = m.pair(m.basis(x1), m.basis(y1)) *
                                       m.pair(m.basis(x2), m.basis(y2));
                        Rational rhs = m.pair(m.b_of(m.basis(y1), m.basis(x1)),
                                              m.c_of(m.basis(y2), m.basis(x2)));
                        if (lhs != rhs) {
                            pass = false;
                            witness = tuple_str({x1, y1, x2, y2});
                            break;
                        }
                    }
        add("rank1_eqn", pass, witness);
    }
    // homo_eqn: <x1x2, y1y2> = <x2, y1 C(y2,x1)> + <B(y2,x1) x2, y1> - <B(y1,x2), C(y2,x1)>
    {
        bool pass = true;
        std::string witness;
        for (std::size_t x1 = 0; x1 < h && pass; ++x1)
            for (std::size_t x2 = 0; x2 < h && pass; ++x2)
                for (std::size_t y1 = 0; y1 < h && pass; ++y1)
                    for (std::size_t y2 = 0; y2 < h; ++y2) {
                        Element ex1 = m.basis(x1), ex2 = m.basis(x2);
                        Element ey1 = m.basis(y1), ey2 = m.basis(y2);
                        Rational lhs = m.pair(m.mul_h(ex1, ex2), m.mul_hp(ey1, ey2));
                        Rational rhs =
                            m.pair(ex2, m.mul_hp(ey1, m.c_of(ey2, ex1))) +
                            m.pair(m.mul_h(m.b_of(ey2, ex1), ex2), ey1) -
                            m.pair(m.b_of(ey1, ex2), m.c_of(ey2, ex1));
                        if (lhs != rhs) {
                            pass = false;
                            witness = tuple_str({x1, x2, y1, y2});
                            break;
                        }
                    }
        add("homo_eqn", pass, witness);
    }
    // homo_eqn2 plus its x<->y transposed re-evaluation
    {
        std::string witness;
        bool pass = homo_eqn2_holds(m, h, &witness);
        if (pass && h > 0) {
            SplitData tw = transposed_world(s);
            Maps tm{tw};
            std::string tw_witness;
            if (!homo_eqn2_holds(tm, h, &tw_witness)) {
                pass = false;
                witness = "transposed world at " + tw_witness;
            }
        }
        add("homo_eqn2", pass, witness);
    }
    return report;
}

Matrix delta(const SplitData& s, const Element& x_in_h) {
    const std::size_t h = s.h;
    Maps maps{s};
    Matrix w(h, h);
    for (std::size_t k = 0; k < h; ++k)
        for (std::size_t l = 0; l < h; ++l)
            w.at(k, l) = maps.pair(x_in_h, maps.mul_hp(maps.basis(k), maps.basis(l)));
    if (h == 0) return w;
    Matrix ginv = inverse(s.pairing);
    return ginv.transpose() * w * ginv;
}

Algebra build_index1(const Algebra& h_algebra, const Algebra& hprime_algebra,
                     const Matrix& pairing) {
    if (auto v = check_associativity(h_algebra); v)
        throw Error(ErrorCode::NotAssociative, "the H table is not associative");
    if (auto v = check_associativity(hprime_algebra); v)
        throw Error(ErrorCode::NotAssociative, "the H' table is not associative");
    SplitData s = split_data_from_parts(h_algebra, hprime_algebra, pairing);
    const std::size_t h = s.h;
    const std::size_t n = 2 * h + 1;
    Maps maps{s};

    std::vector<std::string> names;
    for (const auto& nm : part_names(h, "x")) names.push_back(nm);
    names.insert(names.begin(), "1");
    for (const auto& nm : part_names(h, "y")) names.push_back(nm);

    // basis order: 1, x_1..x_h, y_1..y_h
    auto xi = [&](std::size_t i) { return 1 + i; };
    auto yi = [&](std::size_t i) { return 1 + h + i; };
    std::vector<Rational> table(n * n * n);
    auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
        table[(i * n + j) * n + k] = v;
    };
    // unity row/column
    put(0, 0, 0, 1);
    for (std::size_t i = 0; i < h; ++i) {
        put(0, xi(i), xi(i), 1);
        put(xi(i), 0, xi(i), 1);
        put(0, yi(i), yi(i), 1);
        put(yi(i), 0, yi(i), 1);
    }
    // x x and y y from the part tables
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            for (std::size_t k = 0; k < h; ++k) {
                put(xi(i), xi(j), xi(k), h_algebra.structure(i, j, k));
                put(yi(i), yi(j), yi(k), hprime_algebra.structure(i, j, k));
            }
            // x y = 0; y x = -A.1 + B + C
            put(yi(i), xi(j), 0, -s.a_scalar.at(i, j));
            for (std::size_t k = 0; k < h; ++k) {
                put(yi(i), xi(j), xi(k), s.b_tensor[i][j].coords[k]);
                put(yi(i), xi(j), yi(k), s.c_tensor[i][j].coords[k]);
            }
        }

    Algebra assembled(std::move(names), std::move(table), 0);
    if (auto v = check_associativity(assembled); v) {
        IdentityReport report = check_identities(s);
        std::string names_failed;
        for (const auto& f : report.failing()) {
            if (!names_failed.empty()) names_failed += ", ";
            names_failed += f;
        }
        if (names_failed.empty()) names_failed = "(no single identity isolated)";
        throw Error(ErrorCode::NotAssociative,
                    "assembled table is not associative; failing identities: " + names_failed);
    }
    return assembled;
}

bool index1_spectrum_check(const Algebra& a, const Functional& f) {
    if (!find_unity(a)) throw Error(ErrorCode::NoUnity, "index1_spectrum_check needs a unity");
    if (lie_index(a, 0) != 1)
        throw Error(ErrorCode::Unsupported, "measured Lie index is not 1");
    Decomposition dec = decompose(a, f);
    const SpectralValue zero = SpectralValue::finite(0);
    const SpectralValue one = SpectralValue::finite(1);
    for (const auto& b : dec.blocks)
        if (!(b.alpha == zero || b.alpha == one || b.alpha.is_infinity())) return false;
    return true;
}

}  // namespace algpencil
