#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algpencil/pencil.hpp"

namespace algpencil {

// s = mt * (m - mu*mt)^{-1}, acting on row vectors. Jordan spaces are
// V_k(alpha) = left kernel of (I - (alpha-mu) s)^{k+1} for finite alpha and
// of s^{k+1} for alpha = infinity, so that V_{-1} = {0} and V_0 = Stab.
struct PencilOperator {
    Rational mu;
    Matrix s;
    EvaluatedPencil pencil;
};

struct SpectralBlock {
    SpectralValue alpha;
    std::vector<std::size_t> chain_dims;  // dim V_0(alpha), dim V_1(alpha), ... until stable
    Subspace space;                       // V_N(alpha)
};

struct Decomposition {
    std::vector<SpectralBlock> blocks;
    Functional functional;
    Rational mu_used;

    const SpectralBlock* block_at(const SpectralValue& alpha) const;
    Subspace space_at(const SpectralValue& alpha, std::size_t ambient) const;
};

// Throws DegeneratePencil when chi vanishes at f; BadShift when an explicit
// mu makes m - mu*mt singular. Without an explicit mu the first admissible
// value from the prime sequence 2,3,5,... is taken.
PencilOperator pencil_operator(const Algebra& a, const Functional& f,
                               std::optional<Rational> mu = std::nullopt);

// V_k(alpha); k = -1 gives the zero space. Orbit values use the kernel of
// q(s)^{k+1} with q the orbit polynomial transported to the s-eigenvalue side.
Subspace jordan_space(const Algebra& a, const Functional& f, const SpectralValue& alpha,
                      int k, std::optional<Rational> mu = std::nullopt);

Decomposition decompose(const Algebra& a, const Functional& f,
                        std::optional<Rational> mu = std::nullopt);

struct CheckResult {
    std::string name;
    bool applicable = true;
    bool required = true;  // observations are reported but not demanded
    bool pass = false;
    std::string detail;
};

struct VnReport {
    Decomposition decomposition;
    std::vector<CheckResult> checks;

    bool all_pass() const;  // all applicable required checks
    const CheckResult* check(const std::string& name) const;
};

// The eight-point verifier for the structural properties of the decomposition.
VnReport verify_vn(const Algebra& a, const Functional& f);

struct UOperator {
    Matrix matrix;  // on the canonical basis of V_N(alpha)
    Rational alpha;
    Subspace domain;
};

// Solves F(ab) = F(b U(a)) over V_N(alpha) x V_N(1/alpha); alpha must be
// rational outside {0,1} (InvalidAlpha) with both blocks present
// (MissingBlock); the pairing must be invertible (SingularPairing).
UOperator u_operator(const Algebra& a, const Functional& f, const Rational& alpha);

struct BlockCharpolyResult {
    bool pass = false;
    BinaryForm assembled;       // product of restricted pencil determinants
    Rational constant;          // chi == constant * assembled when pass
    std::vector<std::string> pairing_failures;
};

// Rebuilds chi from the per-block pairings and compares up to a nonzero
// constant; also demands each constituent pairing be invertible.
BlockCharpolyResult block_charpoly_check(const Algebra& a, const Functional& f);

// Im(phi_{alpha,1/alpha}) = V_N(alpha) * V_N(1/alpha) must be a two-sided
// ideal in V_N(1).
bool phi_ideal_check(const Algebra& a, const Functional& f, const SpectralValue& alpha);

}  // namespace algpencil
