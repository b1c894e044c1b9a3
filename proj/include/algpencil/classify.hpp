#pragma once

#include <cstdint>
#include <string>

#include "algpencil/pencil.hpp"

namespace algpencil {

enum class CanonicalLabel { COMM, L1, L2, T2_UPPER_TRIANGULAR };

std::string label_name(CanonicalLabel label);

struct CanonicalForm {
    CanonicalLabel label;
    // rows are the canonical basis written in the input basis; for non-COMM
    // labels change_basis(input, transform) reproduces the registry table.
    Matrix transform;
    Functional functional_used;
};

// Constructive 2-dimensional classification: COMM, or L1/L2 with an explicit
// basis change recovered from the stabilizer lines of a sampled functional.
CanonicalForm canon_dim2(const Algebra& a, std::uint64_t seed = 0);

// 3-dimensional unital classification: COMM (index 3) or the upper-triangular
// table T2.
CanonicalForm canon_dim3_unital(const Algebra& a, std::uint64_t seed = 0);

// Canonical-label comparison; COMM cases are distinguished only by coarse
// invariants (unity existence, generic radical dimension of the symmetric
// evaluated table).
bool iso_check(const Algebra& a, const Algebra& b, std::uint64_t seed = 0);

}  // namespace algpencil
