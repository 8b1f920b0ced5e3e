#include "uqgh/linalg.hpp"

#include <stdexcept>

namespace uqgh {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw std::invalid_argument("ragged columns");
        for (size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::column(size_t j) const {
    Vector v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const RatFunc& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const RatFunc& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix Matrix::scaled(const RatFunc& c) const {
    Matrix r(*this);
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(long e) const {
    if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
    if (e < 0) throw std::invalid_argument("negative matrix power");
    Matrix acc = identity(rows_);
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) {
            const RatFunc& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (size_t k = 0; k < b.rows_; ++k)
                for (size_t l = 0; l < b.cols_; ++l) {
                    const RatFunc& bkl = b.at(k, l);
                    if (!bkl.is_zero()) r.at(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                }
        }
    return r;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    Vector r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack shape mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack shape mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
}

namespace {

size_t expr_size(const RatFunc& x) {
    return static_cast<size_t>(x.num().degree() + x.den().degree() + 2);
}

}  // namespace

Matrix Matrix::rref(std::vector<size_t>* pivot_cols) const {
    Matrix m(*this);
    if (pivot_cols) pivot_cols->clear();
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        // smallest nonzero entry as pivot to limit expression swell
        size_t best = rows_;
        size_t best_size = 0;
        for (size_t i = row; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const size_t sz = expr_size(m.at(i, col));
            if (best == rows_ || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == rows_) continue;
        if (best != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(row, j), m.at(best, j));
        const RatFunc inv = m.at(row, col).inv();
        for (size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const RatFunc f = m.at(i, col);
            for (size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

size_t Matrix::rank() const {
    std::vector<size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

Matrix Matrix::kernel() const {
    std::vector<size_t> pivots;
    const Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols_);
        v[free] = RatFunc(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(cols_, 0);
    return from_columns(basis);
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("solve shape mismatch");
    std::vector<size_t> pivots;
    const Matrix r = hstack(*this, rhs).rref(&pivots);
    // inconsistent when a pivot lands in the rhs block
    for (size_t p : pivots)
        if (p >= cols_) return std::nullopt;
    Matrix x(cols_, rhs.cols_);
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t j = 0; j < rhs.cols_; ++j) x.at(pivots[k], j) = r.at(k, cols_ + j);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(rows_));
    if (!x) return std::nullopt;
    // solve() is consistent for any rhs when rank is full; verify it was
    if ((*this * *x) == identity(rows_)) return x;
    return std::nullopt;
}

bool Matrix::column_space_contains(const Vector& v) const {
    Matrix rhs(rows_, 1);
    for (size_t i = 0; i < rows_; ++i) rhs.at(i, 0) = v[i];
    return solve(rhs).has_value();
}

}  // namespace uqgh
