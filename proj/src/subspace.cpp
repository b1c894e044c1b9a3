#include "algpencil/subspace.hpp"

#include "algpencil/errors.hpp"

namespace algpencil {

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient);
    return s;
}

Subspace Subspace::span(const Matrix& rows, std::size_t ambient) {
    if (rows.cols() != ambient && rows.rows() != 0)
        throw Error(ErrorCode::DimensionMismatch, "span rows have wrong ambient dimension");
    RrefResult r = rref(rows);
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(r.rank, ambient);
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.reduced.row(i));
    return s;
}

Subspace Subspace::span_vector(const std::vector<Rational>& v) {
    Matrix m(1, v.size());
    m.set_row(0, v);
    return span(m, v.size());
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorCode::DimensionMismatch, "membership test in wrong ambient space");
    // reduce v against the RREF basis
    std::vector<Rational> w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t pivot = 0;
        while (pivot < ambient_ && basis_.at(i, pivot) == 0) ++pivot;
        if (pivot == ambient_) continue;
        Rational f = w[pivot];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorCode::DimensionMismatch, "intersection of different ambient spaces");
    if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient());
    // Stack bases; kernel combinations (u,v) with u*A + v*B = 0 give
    // intersection elements u*A.
    Matrix stacked(a.dim() + b.dim(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_row(i));
    RrefResult r = rref(stacked);
    Matrix gens(r.left_kernel.rows(), a.ambient());
    for (std::size_t k = 0; k < r.left_kernel.rows(); ++k) {
        std::vector<Rational> full = r.left_kernel.row(k);
        std::vector<Rational> u(full.begin(), full.begin() + static_cast<long>(a.dim()));
        gens.set_row(k, row_times(u, a.basis()));
    }
    return Subspace::span(gens, a.ambient());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorCode::DimensionMismatch, "sum of different ambient spaces");
    Matrix stacked(a.dim() + b.dim(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_row(i));
    return Subspace::span(stacked, a.ambient());
}

}  // namespace algpencil
