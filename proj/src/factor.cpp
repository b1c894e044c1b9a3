#include "algpencil/factor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "algpencil/errors.hpp"

namespace algpencil {
namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for one machine-word prime. Coefficients are kept in
// [0, p), lowest degree first, trailing zeros trimmed.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<std::int64_t>;

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, std::int64_t p) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t av = i < a.size() ? a[i] : 0;
        std::int64_t bv = i < b.size() ? b[i] : 0;
        r[i] = ((av - bv) % p + p) % p;
    }
    zp_trim(r);
    return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, std::int64_t p) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t av = i < a.size() ? a[i] : 0;
        std::int64_t bv = i < b.size() ? b[i] : 0;
        r[i] = (av + bv) % p;
    }
    zp_trim(r);
    return r;
}

// quotient/remainder; b nonzero
std::pair<ZPoly, ZPoly> zp_divmod(const ZPoly& a, const ZPoly& b, std::int64_t p) {
    ZPoly rem = a, quot;
    if (a.size() < b.size()) return {quot, rem};
    const int db = static_cast<int>(b.size()) - 1;
    quot.assign(a.size() - b.size() + 1, 0);
    std::int64_t binv = mod_inv(b.back(), p);
    for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
        std::int64_t c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        std::int64_t q = c * binv % p;
        quot[static_cast<std::size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k - db + j);
            rem[idx] = ((rem[idx] - q * b[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    zp_trim(rem);
    zp_trim(quot);
    return {quot, rem};
}

ZPoly zp_mod(const ZPoly& a, const ZPoly& b, std::int64_t p) {
    return zp_divmod(a, b, p).second;
}

ZPoly zp_monic(const ZPoly& a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t inv = mod_inv(a.back(), p);
    ZPoly r = a;
    for (auto& c : r) c = c * inv % p;
    return r;
}

ZPoly zp_gcd(ZPoly a, ZPoly b, std::int64_t p) {
    while (!b.empty()) {
        ZPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

ZPoly zp_powmod_x(std::int64_t e, const ZPoly& f, std::int64_t p) {
    // x^e mod f
    ZPoly result{1};
    ZPoly base{0, 1};
    base = zp_mod(base, f, p);
    while (e) {
        if (e & 1) result = zp_mod(zp_mul(result, base, p), f, p);
        e >>= 1;
        if (e) base = zp_mod(zp_mul(base, base, p), f, p);
    }
    return result;
}

ZPoly zp_derivative(const ZPoly& a, std::int64_t p) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k)
        r[k - 1] = a[k] * (static_cast<std::int64_t>(k) % p) % p;
    zp_trim(r);
    return r;
}

// extended euclid: s*a + t*b = 1 for coprime monic-able a, b
void zp_bezout(const ZPoly& a, const ZPoly& b, std::int64_t p, ZPoly& s, ZPoly& t) {
    ZPoly r0 = a, r1 = b;
    ZPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = zp_divmod(r0, r1, p);
        ZPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        ZPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // r0 = gcd (a unit for coprime inputs); scale to make it 1
    std::int64_t inv = mod_inv(r0[0], p);
    s = s0;
    t = t0;
    for (auto& c : s) c = c * inv % p;
    for (auto& c : t) c = c * inv % p;
}

// Berlekamp: f monic squarefree mod p -> monic irreducible factors.
std::vector<ZPoly> berlekamp(const ZPoly& f, std::int64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 1) return {f};

    // petit-Frobenius matrix Q: row i = x^(p*i) mod f
    std::vector<ZPoly> rows(d);
    rows[0] = {1};
    ZPoly xp = zp_powmod_x(p, f, p);
    for (std::size_t i = 1; i < d; ++i) rows[i] = zp_mod(zp_mul(rows[i - 1], xp, p), f, p);

    // nullspace of (Q - I) acting on row vectors v: v(Q - I) = 0.
    // Work with B = (Q - I)^T and find column-space kernel by elimination.
    std::vector<std::vector<std::int64_t>> b(d, std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) b[j][i] = rows[i][j];
        b[i][i] = (b[i][i] - 1 + p) % p;
    }
    // Gaussian elimination on b, tracking pivot columns.
    std::vector<int> pivot_of_col(d, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < d; ++col) {
        std::size_t sel = rank;
        while (sel < d && b[sel][col] == 0) ++sel;
        if (sel == d) continue;
        std::swap(b[sel], b[rank]);
        std::int64_t inv = mod_inv(b[rank][col], p);
        for (auto& v : b[rank]) v = v * inv % p;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == rank || b[i][col] == 0) continue;
            std::int64_t fconst = b[i][col];
            for (std::size_t j = 0; j < d; ++j)
                b[i][j] = ((b[i][j] - fconst * b[rank][j]) % p + p) % p;
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<ZPoly> basis;
    for (std::size_t col = 0; col < d; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        ZPoly v(d, 0);
        v[col] = 1;
        for (std::size_t c2 = 0; c2 < d; ++c2)
            if (pivot_of_col[c2] >= 0)
                v[c2] = (p - b[static_cast<std::size_t>(pivot_of_col[c2])][col]) % p;
        zp_trim(v);
        basis.push_back(std::move(v));
    }
    // kernel dimension (constant vector included) = number of irreducible factors
    const std::size_t nfactors = basis.size();

    std::vector<ZPoly> factors{f};
    if (nfactors == 1) return factors;
    for (const ZPoly& v : basis) {
        if (factors.size() == nfactors) break;
        if (v.size() <= 1) continue;  // the constant vector never splits
        std::vector<ZPoly> next;
        for (const ZPoly& g : factors) {
            if (g.size() <= 2) {
                next.push_back(g);
                continue;
            }
            ZPoly remaining = g;
            for (std::int64_t c = 0; c < p && remaining.size() > 1; ++c) {
                ZPoly vc = v;
                if (vc.empty()) vc.push_back(0);
                vc[0] = ((vc[0] - c) % p + p) % p;
                zp_trim(vc);
                if (vc.empty()) continue;
                ZPoly h = zp_gcd(remaining, vc, p);
                if (h.size() > 1 && h.size() < remaining.size()) {
                    next.push_back(h);
                    remaining = zp_divmod(remaining, h, p).first;
                }
            }
            if (remaining.size() > 1) next.push_back(zp_monic(remaining, p));
        }
        factors = std::move(next);
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting of a monic factorization from mod p to mod p^k >= bound.
// ---------------------------------------------------------------------------

using IPoly = std::vector<Int>;  // integer coefficients, lowest first

IPoly ip_from(const UnivariatePoly& p) {
    IPoly r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = num(p.coeffs()[i]);
    return r;
}

UnivariatePoly ip_to_poly(const IPoly& a) {
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = Rational(a[i]);
    return UnivariatePoly(std::move(c));
}

void ip_trim(IPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly ip_mul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

IPoly ip_sub(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    ip_trim(r);
    return r;
}

Int sym_mod(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly ip_mod_p(const IPoly& a, std::int64_t p) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<std::int64_t>(((a[i] % p) + p) % p);
    zp_trim(r);
    return r;
}

IPoly zp_lift(const ZPoly& a) {
    IPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

// One pairwise lift: F == g*h (mod p), all monic; lift until modulus >= bound.
// Returns factors mod M with the final modulus.
struct LiftedPair {
    IPoly g, h;
    Int modulus;
};

LiftedPair lift_pair(const IPoly& F, const ZPoly& g0, const ZPoly& h0, std::int64_t p,
                     const Int& bound) {
    ZPoly s, t;
    zp_bezout(g0, h0, p, s, t);
    IPoly G = zp_lift(g0), H = zp_lift(h0);
    Int M = p;
    while (M < bound) {
        IPoly e = ip_sub(F, ip_mul(G, H));
        ZPoly ebar(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            Int q = e[i] / M;  // exact: e == 0 mod M
            ebar[i] = static_cast<std::int64_t>(((q % p) + p) % p);
        }
        zp_trim(ebar);
        auto [q, u] = zp_divmod(zp_mul(t, ebar, p), g0, p);
        ZPoly v = zp_add(zp_mul(s, ebar, p), zp_mul(q, h0, p), p);
        IPoly ul = zp_lift(u), vl = zp_lift(v);
        if (G.size() < ul.size()) G.resize(ul.size(), Int(0));
        if (H.size() < vl.size()) H.resize(vl.size(), Int(0));
        for (std::size_t i = 0; i < ul.size(); ++i) G[i] += M * ul[i];
        for (std::size_t i = 0; i < vl.size(); ++i) H[i] += M * vl[i];
        M *= p;
    }
    return {std::move(G), std::move(H), M};
}

// Lift all monic factors of monic F; chain of pairwise lifts.
std::vector<IPoly> hensel_chain(const IPoly& F, std::vector<ZPoly> factors, std::int64_t p,
                                const Int& bound, Int& modulus_out) {
    modulus_out = p;
    while (modulus_out < bound) modulus_out *= p;
    std::vector<IPoly> out;
    IPoly current = F;
    while (factors.size() > 1) {
        ZPoly g0 = factors.front();
        ZPoly rest{1};
        for (std::size_t i = 1; i < factors.size(); ++i) rest = zp_mul(rest, factors[i], p);
        LiftedPair lifted = lift_pair(current, g0, rest, p, bound);
        // normalize to the common modulus for candidate products
        for (auto& c : lifted.g) c = sym_mod(c, modulus_out);
        out.push_back(lifted.g);
        current = lifted.h;
        for (auto& c : current) c = sym_mod(c, modulus_out);
        factors.erase(factors.begin());
    }
    out.push_back(current);
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination for a monic squarefree integer polynomial.
// ---------------------------------------------------------------------------

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<UnivariatePoly> factor_monic_squarefree(const UnivariatePoly& f) {
    const int d = f.degree();
    if (d == 1) return {f};

    IPoly F = ip_from(f);

    // Pick a prime keeping F squarefree mod p.
    static const std::int64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                          37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    std::int64_t p = 0;
    ZPoly fp;
    for (std::int64_t cand : primes) {
        ZPoly fc = ip_mod_p(F, cand);
        if (static_cast<int>(fc.size()) - 1 != d) continue;  // lc vanished
        ZPoly g = zp_gcd(fc, zp_derivative(fc, cand), cand);
        if (g.size() == 1) {
            p = cand;
            fp = zp_monic(fc, cand);
            break;
        }
    }
    if (p == 0)
        throw Error(ErrorCode::ZeroPolynomial, "no squarefree prime found (degree too high?)");

    std::vector<ZPoly> modular = berlekamp(fp, p);
    if (modular.size() == 1) return {f};
    std::sort(modular.begin(), modular.end());

    // Landau-Mignotte style bound on coefficients of monic factors of F.
    Int maxc = 0;
    for (const auto& c : F) {
        Int a = c < 0 ? Int(-c) : c;
        if (a > maxc) maxc = a;
    }
    Int bound = (Int(1) << static_cast<unsigned>(d + 2)) * (maxc + 1) * (d + 1);

    Int M;
    std::vector<IPoly> lifted = hensel_chain(F, modular, p, bound, M);

    std::vector<UnivariatePoly> result;
    UnivariatePoly residual = f;
    std::vector<IPoly> active = lifted;
    std::size_t size = 1;
    while (2 * size <= active.size()) {
        bool found = false;
        std::vector<std::size_t> comb(size);
        for (std::size_t i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            IPoly cand{Int(1)};
            for (std::size_t i : comb) {
                cand = ip_mul(cand, active[i]);
                for (auto& c : cand) c = sym_mod(c, M);
            }
            UnivariatePoly candidate = ip_to_poly(cand);
            UnivariatePoly q;
            if (exact_divide(residual, candidate, &q)) {
                result.push_back(candidate);
                residual = q;
                std::vector<IPoly> rest;
                for (std::size_t i = 0; i < active.size(); ++i)
                    if (std::find(comb.begin(), comb.end(), i) == comb.end())
                        rest.push_back(active[i]);
                active = std::move(rest);
                found = true;
                break;
            }
            if (!next_combination(comb, active.size())) break;
        }
        if (!found) ++size;
    }
    if (residual.degree() > 0) result.push_back(residual);
    return result;
}

}  // namespace

UnivariatePoly PolyFactorization::expand() const {
    UnivariatePoly r = UnivariatePoly::constant(constant);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) r = r * f;
    return r;
}

PolyFactorization factor_poly(const UnivariatePoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");

    PolyFactorization out;
    UnivariatePoly work = p.primitive(&out.constant);
    if (work.degree() == 0) return out;

    // Yun squarefree decomposition: work = prod part_i ^ i.
    std::vector<UnivariatePoly> parts;  // parts[i] has multiplicity i+1
    {
        UnivariatePoly f = work;
        UnivariatePoly g = poly_gcd(f, f.derivative());
        UnivariatePoly w = divmod(f, g).quotient;
        UnivariatePoly y = divmod(f.derivative(), g).quotient;
        UnivariatePoly z = y - w.derivative();
        while (w.degree() > 0) {
            UnivariatePoly a = poly_gcd(w, z);
            parts.push_back(a);
            w = divmod(w, a).quotient;
            z = divmod(z, a).quotient - w.derivative();
        }
    }

    for (std::size_t i = 0; i < parts.size(); ++i) {
        UnivariatePoly part = parts[i];
        if (part.degree() < 1) continue;
        const int multiplicity = static_cast<int>(i) + 1;
        part = part.primitive();

        // Handle the x factor and leading-coefficient substitution.
        if (part.coeff(0) == 0) {
            out.factors.emplace_back(UnivariatePoly::of({0, 1}), multiplicity);
            part = divmod(part, UnivariatePoly::of({0, 1})).quotient;
            if (part.degree() < 1) continue;
        }
        Rational lc = part.leading();
        UnivariatePoly monic_input = part;
        bool substituted = false;
        if (lc != 1) {
            // F(x) = lc^(d-1) * part(x/lc) is monic with integer coefficients:
            // coefficient k picks up lc^(d-1-k)
            std::vector<Rational> fc(part.coeffs().size());
            const int d = part.degree();
            Rational pw = Rational(1) / lc;
            for (int k = d; k >= 0; --k) {
                fc[static_cast<std::size_t>(k)] = part.coeff(static_cast<std::size_t>(k)) * pw;
                pw *= lc;
            }
            monic_input = UnivariatePoly(std::move(fc));
            substituted = true;
        }
        std::vector<UnivariatePoly> irreducibles = factor_monic_squarefree(monic_input);
        for (UnivariatePoly& g : irreducibles) {
            if (substituted) {
                // map back: g(lc * x), then primitive part
                std::vector<Rational> gc(g.coeffs().size());
                Rational pw = 1;
                for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
                    gc[k] = g.coeff(k) * pw;
                    pw *= lc;
                }
                g = UnivariatePoly(std::move(gc)).primitive();
            }
            out.factors.emplace_back(g, multiplicity);
        }
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const auto& ca = a.first.coeffs();
        const auto& cb = b.first.coeffs();
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    });

    // Fix the constant so the expansion is exact.
    UnivariatePoly prod = UnivariatePoly::constant(1);
    for (const auto& [f, m] : out.factors)
        for (int i = 0; i < m; ++i) prod = prod * f;
    out.constant = p.leading() / prod.leading();
    return out;
}

std::vector<std::complex<double>> numeric_roots(const UnivariatePoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
    if (p.degree() < 1)
        throw Error(ErrorCode::ZeroPolynomial, "roots of a constant polynomial");

    PolyFactorization fac = factor_poly(p);
    std::vector<std::complex<double>> out;
    using C = std::complex<long double>;
    for (const auto& [f, mult] : fac.factors) {
        const int d = f.degree();
        std::vector<C> roots;
        if (d == 1) {
            roots.push_back(C(-to_double(f.coeff(0) / f.coeff(1)), 0.0L));
        } else {
            std::vector<C> c(static_cast<std::size_t>(d) + 1);
            for (int k = 0; k <= d; ++k)
                c[static_cast<std::size_t>(k)] =
                    C(static_cast<long double>(to_double(f.coeff(static_cast<std::size_t>(k)) / f.leading())), 0.0L);
            auto eval = [&](C z) {
                C acc = 0;
                for (int k = d; k >= 0; --k) acc = acc * z + c[static_cast<std::size_t>(k)];
                return acc;
            };
            auto eval_d = [&](C z) {
                C acc = 0;
                for (int k = d; k >= 1; --k)
                    acc = acc * z + c[static_cast<std::size_t>(k)] * static_cast<long double>(k);
                return acc;
            };
            roots.resize(static_cast<std::size_t>(d));
            C seed(0.4L, 0.9L);
            C z(1.0L, 0.0L);
            for (auto& r : roots) {
                z *= seed;
                r = z;
            }
            for (int iter = 0; iter < 500; ++iter) {
                long double worst = 0;
                for (std::size_t i = 0; i < roots.size(); ++i) {
                    C fv = eval(roots[i]);
                    C dv = eval_d(roots[i]);
                    C sum = 0;
                    for (std::size_t j = 0; j < roots.size(); ++j)
                        if (j != i) sum += C(1.0L, 0.0L) / (roots[i] - roots[j]);
                    C denom = dv - fv * sum;
                    if (std::abs(denom) == 0.0L) continue;
                    C delta = fv / denom;
                    roots[i] -= delta;
                    worst = std::max(worst, std::abs(delta) / (1.0L + std::abs(roots[i])));
                }
                if (worst < 1e-19L) break;
            }
        }
        for (const C& r : roots)
            for (int i = 0; i < mult; ++i)
                out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

}  // namespace algpencil
