#include "algpencil/matrix.hpp"

#include "algpencil/errors.hpp"

namespace algpencil {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix initializer");
        for (const auto& v : r) data_.push_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
    return std::vector<Rational>(data_.begin() + static_cast<long>(i * cols_),
                                 data_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const std::vector<Rational>& values) {
    if (values.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "set_row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = values[j];
}

Rational Matrix::trace() const {
    if (!is_square()) throw Error(ErrorCode::NonSquare, "trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix addition shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix subtraction shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> row_times(const std::vector<Rational>& v, const Matrix& m) {
    if (v.size() != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "row-vector product shape mismatch");
    std::vector<Rational> r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    Matrix t = Matrix::identity(m.rows());  // invariant: r = t * m
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        std::size_t sel = pr;
        while (sel < m.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(pr, j), r.at(sel, j));
            for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t.at(pr, j), t.at(sel, j));
        }
        Rational inv = Rational(1) / r.at(pr, col);
        if (inv != 1) {
            for (std::size_t j = 0; j < r.cols(); ++j) r.at(pr, j) *= inv;
            for (std::size_t j = 0; j < t.cols(); ++j) t.at(pr, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr) continue;
            Rational f = r.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) -= f * r.at(pr, j);
            for (std::size_t j = 0; j < t.cols(); ++j) t.at(i, j) -= f * t.at(pr, j);
        }
        pivots.push_back(col);
        ++pr;
    }
    Matrix kernel(m.rows() - pr, m.rows());
    for (std::size_t i = pr; i < m.rows(); ++i)
        kernel.set_row(i - pr, t.row(i));
    return RrefResult{std::move(r), pr, std::move(kernel), std::move(pivots)};
}

Rational det_ff(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Clear denominators row by row, then run integer Bareiss.
    std::vector<Int> a(n * n);
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, den(m.at(i, j)));
        scale /= Rational(l);
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = Rational(l) * m.at(i, j);
            a[i * n + j] = num(v);
        }
    }

    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel * n + k] == 0) ++sel;
            if (sel == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[sel * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                a[i * n + j] = v / prev;  // exact by Bareiss' identity
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Rational d = Rational(a[n * n - 1]) * scale;
    return sign < 0 ? -d : d;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix r = m;
    Matrix t = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && r.at(sel, col) == 0) ++sel;
        if (sel == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(r.at(col, j), r.at(sel, j));
                std::swap(t.at(col, j), t.at(sel, j));
            }
        }
        Rational inv = Rational(1) / r.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            r.at(col, j) *= inv;
            t.at(col, j) *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Rational f = r.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                r.at(i, j) -= f * r.at(col, j);
                t.at(i, j) -= f * t.at(col, j);
            }
        }
    }
    return t;
}

Matrix matrix_pow(const Matrix& m, unsigned k) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "power of non-square matrix");
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

}  // namespace algpencil
