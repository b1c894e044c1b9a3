#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algpencil/matrix.hpp"
#include "algpencil/subspace.hpp"

namespace algpencil {

struct Element {
    std::vector<Rational> coords;

    bool is_zero() const {
        for (const auto& v : coords)
            if (v != 0) return false;
        return true;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.coords == b.coords; }
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Rational& s, const Element& a);

// Finite-dimensional algebra given by structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k.
class Algebra {
public:
    Algebra(std::vector<std::string> basis_names, std::vector<Rational> table,
            std::optional<std::size_t> unity = std::nullopt);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    std::optional<std::size_t> unity_index() const { return unity_; }

    const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Rational>& table() const { return c_; }

    Element basis_element(std::size_t i) const;
    Element product_of_basis(std::size_t i, std::size_t j) const;
    Element multiply(const Element& a, const Element& b) const;
    Element commutator(const Element& a, const Element& b) const;

    Algebra with_unity(std::size_t index) const;

    std::string element_str(const Element& e) const;

private:
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<Rational> c_;
    std::optional<std::size_t> unity_;
};

// First violating triple scanning the right factor outermost, with
// difference e_i(e_j e_k) - (e_i e_j)e_k.
struct AssociativityViolation {
    std::size_t i, j, k;
    Element difference;
};
std::optional<AssociativityViolation> check_associativity(const Algebra& a);

std::optional<Element> find_unity(const Algebra& a);

// New basis f_i = sum_j p[i][j] e_j; throws SingularMatrix.
Algebra change_basis(const Algebra& a, const Matrix& p);

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& w);

struct SolvabilityResult {
    bool solvable;
    std::vector<Subspace> derived_series;  // s, [s,s], ... up to stabilization
};
// Throws NotBracketClosed when s is not closed under the commutator.
SolvabilityResult is_solvable(const Algebra& a, const Subspace& s);

// Named examples: L1, L2, T2, D, C2, Z<n>, M<n>, T<n>, dsum(a,b).
Algebra registry(const std::string& name);
Algebra direct_sum(const Algebra& a, const Algebra& b);

}  // namespace algpencil
