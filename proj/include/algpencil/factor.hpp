#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "algpencil/poly.hpp"

namespace algpencil {

// constant * prod(factors[i].first ^ factors[i].second) == input, exactly.
// Factors are irreducible over Q, primitive integer, positive leading
// coefficient, sorted for deterministic output.
struct PolyFactorization {
    Rational constant;
    std::vector<std::pair<UnivariatePoly, int>> factors;

    UnivariatePoly expand() const;
};

PolyFactorization factor_poly(const UnivariatePoly& p);

// All complex roots with multiplicity, for reporting only. Roots of each
// irreducible factor are computed by Aberth-Ehrlich iteration in long double,
// good far beyond the promised 12 digits at these degrees.
std::vector<std::complex<double>> numeric_roots(const UnivariatePoly& p);

}  // namespace algpencil
