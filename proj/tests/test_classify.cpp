#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algpencil/classify.hpp>
#include <algpencil/errors.hpp>
#include <algpencil/rng.hpp>

using namespace algpencil;

namespace {

Matrix random_invertible(SplitMix64& rng, std::size_t n) {
    for (;;) {
        Matrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p.at(i, j) = Rational(rng.range(-5, 5));
        if (det_ff(p) != 0) return p;
    }
}

// Q[t]/t^3: commutative, unital, 3-dimensional
Algebra jet3() {
    std::vector<Rational> table(27);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { table[(i * 3 + j) * 3 + k] = 1; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(0, 2, 2);
    set(2, 0, 2);
    set(1, 1, 2);
    return Algebra({"1", "t", "t2"}, std::move(table), 0);
}

}  // namespace

TEST_CASE("canon_dim2 on the registry tables") {
    CanonicalForm l1 = canon_dim2(registry("L1"));
    CHECK(l1.label == CanonicalLabel::L1);
    CHECK(change_basis(registry("L1"), l1.transform).table() == registry("L1").table());

    CanonicalForm l2 = canon_dim2(registry("L2"));
    CHECK(l2.label == CanonicalLabel::L2);
    CHECK(change_basis(registry("L2"), l2.transform).table() == registry("L2").table());

    CHECK(canon_dim2(registry("D")).label == CanonicalLabel::COMM);
    CHECK(canon_dim2(registry("C2")).label == CanonicalLabel::COMM);
    CHECK(canon_dim2(registry("Z2")).label == CanonicalLabel::COMM);

    CHECK_THROWS_AS(canon_dim2(registry("T2")), Error);  // wrong dimension
}

TEST_CASE("canon_dim2 recovers the label through random basis changes") {
    SplitMix64 rng(101);
    for (const char* name : {"L1", "L2"}) {
        Algebra base = registry(name);
        for (int trial = 0; trial < 25; ++trial) {
            Matrix p = random_invertible(rng, 2);
            Algebra scrambled = change_basis(base, p);
            CanonicalForm c = canon_dim2(scrambled, trial);
            CAPTURE(name);
            CAPTURE(trial);
            CHECK(label_name(c.label) == name);
            CHECK(change_basis(scrambled, c.transform).table() == base.table());
        }
    }
}

TEST_CASE("canon_dim2 rejects non-associative input") {
    // x*x = y, x*y = x is not associative
    std::vector<Rational> table(8);
    table[(0 * 2 + 0) * 2 + 1] = 1;
    table[(0 * 2 + 1) * 2 + 0] = 1;
    Algebra bad({"x", "y"}, std::move(table));
    CHECK_THROWS_AS(canon_dim2(bad), Error);
}

TEST_CASE("canon_dim3_unital on T2 and its disguises") {
    CanonicalForm t2 = canon_dim3_unital(registry("T2"));
    CHECK(t2.label == CanonicalLabel::T2_UPPER_TRIANGULAR);
    CHECK(change_basis(registry("T2"), t2.transform).table() == registry("T2").table());

    SplitMix64 rng(102);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix p = random_invertible(rng, 3);
        Algebra scrambled = change_basis(registry("T2"), p);
        CanonicalForm c = canon_dim3_unital(scrambled, trial);
        CAPTURE(trial);
        CHECK(c.label == CanonicalLabel::T2_UPPER_TRIANGULAR);
        CHECK(change_basis(scrambled, c.transform).table() == registry("T2").table());
    }
}

TEST_CASE("canon_dim3_unital: commutative and error cases") {
    CHECK(canon_dim3_unital(jet3()).label == CanonicalLabel::COMM);
    CHECK_THROWS_AS(canon_dim3_unital(registry("Z3")), Error);   // no unity
    CHECK_THROWS_AS(canon_dim3_unital(registry("M2")), Error);   // wrong dimension
}

TEST_CASE("canonicalization is idempotent") {
    CanonicalForm c1 = canon_dim2(registry("L1"));
    CHECK(c1.label == CanonicalLabel::L1);
    CanonicalForm c2 = canon_dim3_unital(registry("T2"));
    CHECK(c2.label == CanonicalLabel::T2_UPPER_TRIANGULAR);
}

TEST_CASE("iso_check") {
    SplitMix64 rng(103);
    Matrix p = random_invertible(rng, 2);
    CHECK(iso_check(registry("L1"), change_basis(registry("L1"), p)));
    CHECK(!iso_check(registry("L1"), registry("L2")));
    CHECK(!iso_check(registry("L1"), registry("D")));
    CHECK_THROWS_AS(iso_check(registry("T2"), registry("M2")), Error);  // dim 4 input

    Matrix q = random_invertible(rng, 3);
    CHECK(iso_check(registry("T2"), change_basis(registry("T2"), q)));
    CHECK(!iso_check(registry("T2"), jet3()));

    // 3-dimensional non-unital inputs are out of scope
    CHECK_THROWS_AS(iso_check(registry("Z3"), registry("Z3")), Error);

    // coarse COMM comparison: D vs Z2 differ (unity), D vs C2 agree on the
    // coarse invariants by design
    CHECK(!iso_check(registry("D"), registry("Z2")));
    CHECK(iso_check(registry("D"), registry("C2")));
}
