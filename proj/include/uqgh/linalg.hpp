#pragma once

#include <optional>
#include <vector>

#include "uqgh/ratfunc.hpp"

namespace uqgh {

using Vector = std::vector<RatFunc>;

// Dense matrix over Q(q) with exact fraction-free-enough Gaussian elimination
// (pivots chosen by smallest expression size to limit swell).
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static Matrix identity(size_t n);
    static Matrix from_columns(const std::vector<Vector>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    RatFunc& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const RatFunc& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    Vector column(size_t j) const;
    bool is_zero() const;
    bool operator==(const Matrix&) const = default;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const RatFunc& c) const;
    Matrix transpose() const;
    Matrix pow(long e) const;  // e >= 0, square only
    static Matrix kron(const Matrix& a, const Matrix& b);
    Vector apply(const Vector& v) const;

    // horizontal/vertical stacking and 2x2 block-diagonal composition
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    // reduced row echelon form; records pivot columns if requested
    Matrix rref(std::vector<size_t>* pivot_cols = nullptr) const;
    size_t rank() const;
    // columns form a basis of the null space
    Matrix kernel() const;
    // solves this * X = rhs exactly; nullopt when inconsistent
    std::optional<Matrix> solve(const Matrix& rhs) const;
    std::optional<Matrix> inverse() const;
    // true when v lies in the column space
    bool column_space_contains(const Vector& v) const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<RatFunc> e_;
};

}  // namespace uqgh
