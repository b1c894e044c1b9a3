#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algpencil/errors.hpp>
#include <algpencil/pencil.hpp>
#include <algpencil/rng.hpp>

using namespace algpencil;

namespace {

Functional fn(std::initializer_list<Rational> v) { return Functional{std::vector<Rational>(v)}; }

const std::vector<std::string> kCorpus = {"L1", "L2",  "T2",          "D",
                                          "C2", "M2",  "T3",          "dsum(L1,L1)",
                                          "Z2", "dsum(T2,D)"};

}  // namespace

TEST_CASE("evaluate: direct substitution oracle") {
    // T2 at F=(1,2,4): row 3 is (f3, -f1+f2+f3, f3)
    EvaluatedPencil p = evaluate(registry("T2"), fn({1, 2, 4}));
    CHECK(p.m == Matrix{{1, 2, 4}, {2, 2, 0}, {4, 5, 4}});

    EvaluatedPencil q = evaluate(registry("L1"), fn({1, 1}));
    CHECK(q.m == Matrix{{1, 0}, {1, 0}});

    EvaluatedPencil z = evaluate(registry("Z2"), fn({3, 7}));
    CHECK(z.m.is_zero());

    CHECK_THROWS_AS(evaluate(registry("T2"), fn({1, 2})), Error);
}

TEST_CASE("charpoly: exact forms") {
    // chi(T2, (1,2,4)) = -25*lambda*mu*(lambda+mu)
    CharPencil t2 = charpoly(registry("T2"), fn({1, 2, 4}));
    CHECK(t2.chi == BinaryForm(3, {0, -25, -25, 0}));
    CHECK(t2.chi.eval(1, 1) == Rational(-50));
    CHECK(t2.chi.eval(2, 1) == Rational(-150));
    REQUIRE(t2.factored.has_value());
    CHECK(t2.factored->constant == Rational(-25));
    CHECK(t2.factored->mult_lambda == 1);
    CHECK(t2.factored->mult_mu == 1);
    CHECK(t2.factored->multiplicity_of(1) == 1);

    // chi(D, (0,1)) = -(lambda+mu)^2
    CharPencil d = charpoly(registry("D"), fn({0, 1}));
    CHECK(d.chi == BinaryForm(2, {-1, -2, -1}));

    // zero multiplication: identically zero
    CharPencil z = charpoly(registry("Z2"), fn({5, -3}));
    CHECK(z.chi.is_zero());
    CHECK(!z.factored.has_value());
}

TEST_CASE("stabilizer examples") {
    Algebra t2 = registry("T2");
    Functional f = fn({1, 2, 4});

    Subspace s1 = stabilizer(t2, f, SpectralValue::finite(1));
    CHECK(s1.dim() == 1);
    CHECK(s1.contains({1, 0, 0}));  // the unity line

    Subspace s0 = stabilizer(t2, f, SpectralValue::finite(0));
    CHECK(s0.dim() == 1);
    CHECK(s0.contains({-2, -3, 2}));

    Subspace si = stabilizer(registry("L1"), fn({1, 1}), SpectralValue::infinity());
    CHECK(si.dim() == 1);
    CHECK(si.contains({0, 1}));

    CHECK_THROWS_AS(
        stabilizer(t2, f, SpectralValue::orbit(UnivariatePoly::of({-2, 0, 1}))),
        Error);
}

TEST_CASE("nil examples") {
    CHECK(nil(registry("L1"), fn({1, 1})).is_zero());
    CHECK(nil(registry("Z2"), fn({1, 5})) == Subspace::full(2));
    CHECK(nil(registry("T2"), fn({1, 2, 4})).is_zero());
}

TEST_CASE("q_form examples") {
    QForm q1 = q_form(registry("T2"), fn({1, 2, 4}));
    CHECK(q1.gram == Matrix{{1}});
    CHECK(q1.nondegenerate);
    CHECK(q1.lambda_plus_mu_multiplicity == 1);

    QForm q2 = q_form(registry("D"), fn({0, 1}));
    CHECK(q2.gram == Matrix{{0, 1}, {1, 0}});
    CHECK(q2.nondegenerate);
    CHECK(q2.lambda_plus_mu_multiplicity == 2);

    QForm q3 = q_form(registry("Z2"), fn({1, 1}));
    CHECK(q3.gram.is_zero());
    CHECK(!q3.nondegenerate);
    CHECK(!q3.lambda_plus_mu_multiplicity.has_value());
}

TEST_CASE("q_form gram is symmetric on Stab(1)") {
    for (const auto& name : kCorpus) {
        Algebra a = registry(name);
        Functional f = random_functional(a, 5, 0);
        QForm q = q_form(a, f);
        CHECK(q.gram == q.gram.transpose());
    }
}

TEST_CASE("lie_index: known values") {
    CHECK(lie_index(registry("L1"), 0) == 0);
    CHECK(lie_index(registry("L2"), 0) == 0);
    CHECK(lie_index(registry("T2"), 0) == 1);
    CHECK(lie_index(registry("D"), 0) == 2);   // commutative: index = dim
    CHECK(lie_index(registry("C2"), 0) == 2);
    CHECK(lie_index(registry("Z3"), 0) == 3);
    CHECK(lie_index(registry("M2"), 0) == 2);
}

TEST_CASE("sample_generic") {
    CHECK_THROWS_AS(sample_generic(registry("Z2"), 0), Error);

    GenericSample t2 = sample_generic(registry("T2"), 0);
    CHECK(t2.certificate.attempts <= 16);
    CHECK(t2.certificate.chi_nonzero);
    CHECK(!charpoly(registry("T2"), t2.f).chi.is_zero());

    GenericSample d = sample_generic(registry("D"), 0);
    CHECK(d.f.values[1] != 0);  // chi = -f2^2 (lambda+mu)^2
    CHECK(d.certificate.attempts == 1);
}

TEST_CASE("transpose symmetry: chi(lambda,mu) == chi(mu,lambda)") {
    for (const auto& name : kCorpus) {
        Algebra a = registry(name);
        for (std::uint64_t s = 0; s < 3; ++s) {
            Functional f = random_functional(a, 97, s);
            CharPencil cp = charpoly(a, f);
            CAPTURE(name);
            CHECK(cp.chi == cp.chi.swapped());
        }
    }
}

TEST_CASE("stabilizer intersection, dimensions, and product inclusions") {
    const std::vector<SpectralValue> finite_vals = {
        SpectralValue::finite(0), SpectralValue::finite(1), SpectralValue::finite(2),
        SpectralValue::finite(Rational(1, 2)), SpectralValue::finite(-1)};
    for (const auto& name : kCorpus) {
        Algebra a = registry(name);
        CAPTURE(name);
        for (std::uint64_t s = 0; s < 2; ++s) {
            Functional f = random_functional(a, 131, s);
            EvaluatedPencil p = evaluate(a, f);
            Subspace nil_f = nil(a, f);
            Subspace stab_inf = stabilizer(p, SpectralValue::infinity());

            // dim Stab(0) == dim Stab(inf); dim Stab(alpha) == dim Stab(1/alpha)
            CHECK(stabilizer(p, SpectralValue::finite(0)).dim() == stab_inf.dim());
            CHECK(stabilizer(p, SpectralValue::finite(2)).dim() ==
                  stabilizer(p, SpectralValue::finite(Rational(1, 2))).dim());

            for (const auto& alpha : finite_vals) {
                Subspace sa = stabilizer(p, alpha);
                // Stab(alpha) . Stab(inf) subset Stab(inf) for alpha != 0
                if (alpha.value() != 0)
                    CHECK(stab_inf.contains(subspace_product(a, sa, stab_inf)));
                for (const auto& beta : finite_vals) {
                    Subspace sb = stabilizer(p, beta);
                    if (!(alpha == beta)) {
                        // Stab(alpha) cap Stab(beta) == Nil
                        CHECK(intersect(sa, sb) == nil_f);
                    }
                    // product inclusion
                    Subspace prod = subspace_product(a, sa, sb);
                    CHECK(stabilizer(p, SpectralValue::finite(alpha.value() * beta.value()))
                              .contains(prod));
                    // F(Stab(alpha) * Stab(beta)) = 0 when alpha*beta != 1
                    if (alpha.value() * beta.value() != 1) {
                        for (std::size_t i = 0; i < sa.dim(); ++i)
                            for (std::size_t j = 0; j < sb.dim(); ++j)
                                CHECK(f.apply(a.multiply(Element{sa.basis_row(i)},
                                                         Element{sb.basis_row(j)})) == 0);
                    }
                }
            }
            // Stab(0) . Stab(inf) subset Nil
            CHECK(nil_f.contains(
                subspace_product(a, stabilizer(p, SpectralValue::finite(0)), stab_inf)));
            // Nil == 0 iff chi != 0
            CHECK(nil_f.is_zero() == !det_pencil(p.m, p.mt).is_zero());
        }
    }
}

TEST_CASE("factor divisibility matches stabilizer non-triviality") {
    for (const auto& name : kCorpus) {
        Algebra a = registry(name);
        CAPTURE(name);
        Functional f = random_functional(a, 211, 1);
        CharPencil cp = charpoly(a, f);
        if (!cp.factored) continue;
        EvaluatedPencil p = evaluate(a, f);
        for (const Rational& alpha :
             {Rational(0), Rational(1), Rational(2), Rational(1, 2), Rational(-1)}) {
            int mult = alpha == 0 ? cp.factored->mult_mu : cp.factored->multiplicity_of(alpha);
            bool nontrivial = !stabilizer(p, SpectralValue::finite(alpha)).is_zero();
            CAPTURE(rational_str(alpha));
            CHECK((mult > 0) == nontrivial);
        }
        CHECK((cp.factored->mult_lambda > 0) ==
              !stabilizer(p, SpectralValue::infinity()).is_zero());
    }
}

TEST_CASE("Stab(1) is commutative at accepted generic functionals") {
    for (const auto& name : kCorpus) {
        if (name == "Z2") continue;  // degenerate by design
        Algebra a = registry(name);
        GenericSample g = sample_generic(a, 7);
        Subspace s1 = stabilizer(a, g.f, SpectralValue::finite(1));
        for (std::size_t i = 0; i < s1.dim(); ++i)
            for (std::size_t j = 0; j < s1.dim(); ++j)
                CHECK(a.commutator(Element{s1.basis_row(i)}, Element{s1.basis_row(j)})
                          .is_zero());
    }
}

TEST_CASE("spectral value reciprocal") {
    CHECK(SpectralValue::finite(2).reciprocal() == SpectralValue::finite(Rational(1, 2)));
    CHECK(SpectralValue::finite(0).reciprocal() == SpectralValue::infinity());
    CHECK(SpectralValue::infinity().reciprocal() == SpectralValue::finite(0));
    // orbit of t^2 - 2 (roots +-sqrt2) -> reciprocal roots +-1/sqrt2: 2t^2-1... -1+2t^2
    SpectralValue orb = SpectralValue::orbit(UnivariatePoly::of({-2, 0, 1}));
    CHECK(orb.reciprocal() == SpectralValue::orbit(UnivariatePoly::of({-1, 0, 2})));
    CHECK(orb.reciprocal().reciprocal() == orb);
}
