#pragma once

#include <vector>

#include "algpencil/matrix.hpp"

namespace algpencil {

// Subspace of Q^n stored as its reduced row-echelon basis, so that equal
// subspaces have identical representations.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    // canonicalize the row span of `rows` (rows may be dependent or zero)
    static Subspace span(const Matrix& rows, std::size_t ambient);
    static Subspace span_vector(const std::vector<Rational>& v);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Rational> basis_row(std::size_t i) const { return basis_.row(i); }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    bool is_zero() const { return dim() == 0; }

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Matrix basis_;  // RREF, no zero rows
    std::size_t ambient_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

}  // namespace algpencil
