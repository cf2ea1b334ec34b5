#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace jones {

using Complex = std::complex<double>;

// Dense row-major complex matrix, sized for path-model representations
// (a few hundred rows at most). Multiplication goes through the runtime
// dispatched kernels.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols); // zero-filled

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const Complex* data() const { return data_.data(); }
    Complex* data() { return data_.data(); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix& operator+=(const Matrix& o);
    Matrix scaled(Complex s) const;
    Matrix adjoint() const;

    Complex trace() const;
    std::vector<Complex> diagonal() const;

    // Entrywise max-abs norm.
    double max_abs() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

// a*I + s*M  (the shape of every braid-generator matrix here).
Matrix scaled_identity_plus(Complex a, Complex s, const Matrix& M);

double max_abs_diff(const Matrix& x, const Matrix& y);

// ||M^dagger M - I||_inf, the unitarity defect.
double unitarity_defect(const Matrix& M);

} // namespace jones
