#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "algpencil/rational.hpp"

namespace algpencil {

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> init);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    const std::vector<Rational>& data() const { return data_; }

    Matrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    std::vector<Rational> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rational>& values);

    Rational trace() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Row-vector helpers: v is a length-rows() row vector.
std::vector<Rational> row_times(const std::vector<Rational>& v, const Matrix& m);

struct RrefResult {
    Matrix reduced;            // reduced row-echelon form of the input
    std::size_t rank;
    Matrix left_kernel;        // rows span {v : v * m = 0}
    std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);

// Exact determinant via fraction-free Bareiss elimination on the
// denominator-cleared integer matrix.
Rational det_ff(const Matrix& m);

// Gauss-Jordan inverse; throws SingularMatrix.
Matrix inverse(const Matrix& m);

Matrix matrix_pow(const Matrix& m, unsigned k);

}  // namespace algpencil
