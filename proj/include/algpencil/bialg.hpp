#pragma once

#include <string>
#include <vector>

#include "algpencil/jordan.hpp"

namespace algpencil {

// The H + K.1 + H' package of a unital index-1 algebra: H = V_N(0),
// H' = V_N(infinity), pairing <x,y> = A(y,x), and the expansion
// y*x = -A(y,x).1 + B(y,x) + C(y,x) with B in H, C in H'.
struct SplitData {
    std::size_t h = 0;
    Algebra h_algebra;       // multiplication on H in the x-basis
    Algebra hprime_algebra;  // multiplication on H' in the y-basis
    Matrix pairing;          // pairing[i][j] = <x_i, y_j>
    Matrix a_scalar;         // a_scalar[i][j] = A(y_i, x_j) = pairing[j][i]
    std::vector<std::vector<Element>> b_tensor;  // B(y_i, x_j), coords in H
    std::vector<std::vector<Element>> c_tensor;  // C(y_i, x_j), coords in H'

    // provenance when produced by split(): rows x_1..x_h, 1, y_1..y_h in the
    // input basis, and the normalized functional
    Matrix adapted_basis;
    Functional functional;

    SplitData() : h_algebra({}, {}), hprime_algebra({}, {}) {}
};

struct IdentityReport {
    struct Entry {
        std::string name;
        bool pass;
        std::string witness;  // index tuple on failure
    };
    std::vector<Entry> entries;

    bool all_pass() const;
    const Entry* find(const std::string& name) const;
    std::vector<std::string> failing() const;
};

// Splits a unital algebra whose spectrum at f is {0,1,infinity} with
// dim V(1) = 1. The y-basis is normalized so the pairing is the identity.
SplitData split(const Algebra& a, const Functional& f);

// B and C derived from a dual pair by duality; entry point for hand-built
// packages (build_index1 and tests).
SplitData split_data_from_parts(const Algebra& h_algebra, const Algebra& hprime_algebra,
                                const Matrix& pairing);

// Exhaustive exact check of the split identity system over basis tuples.
IdentityReport check_identities(const SplitData& s);

// Matrix of Delta(x) in the x (x) x basis: <Delta(x), y_k (x) y_l> = <x, y_k y_l>.
Matrix delta(const SplitData& s, const Element& x_in_h);

// Assembles the (2h+1)-dimensional unital algebra with basis (1, x..., y...)
// from a dual pair; throws NotAssociative naming the failing identities, or
// SingularPairing.
Algebra build_index1(const Algebra& h_algebra, const Algebra& hprime_algebra,
                     const Matrix& pairing);

// For unital algebras of measured Lie index 1: the spectrum at f must be
// inside {0, 1, infinity}.
bool index1_spectrum_check(const Algebra& a, const Functional& f);

}  // namespace algpencil
