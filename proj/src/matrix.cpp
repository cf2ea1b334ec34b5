#include "jones/matrix.hpp"

#include "jones/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace jones {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    kernels::gemm(data(), o.data(), r.data(), rows_, cols_, o.cols_);
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix Matrix::scaled(Complex s) const {
    Matrix r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
}

Matrix Matrix::adjoint() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

std::vector<Complex> Matrix::diagonal() const {
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    std::vector<Complex> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
    return d;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

Matrix scaled_identity_plus(Complex a, Complex s, const Matrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("scaled_identity_plus needs a square matrix");
    Matrix r = M.scaled(s);
    for (std::size_t i = 0; i < M.rows(); ++i) r(i, i) += a;
    return r;
}

double max_abs_diff(const Matrix& x, const Matrix& y) { return (x - y).max_abs(); }

double unitarity_defect(const Matrix& M) {
    return max_abs_diff(M.adjoint() * M, Matrix::identity(M.rows()));
}

} // namespace jones
