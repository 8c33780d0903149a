#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcsim {

using cplx = std::complex<double>;

// Small dense complex matrix, row-major. Sized for gate matrices and the
// dense circuit-unitary oracle (dimension <= 2^10), not for the state
// vector hot path.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    const cplx* data() const { return data_.data(); }
    cplx* data() { return data_.data(); }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(cplx s) const;

    Matrix adjoint() const;

    std::vector<cplx> apply(std::span<const cplx> v) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

// Largest |entry|.
double max_abs(const Matrix& m);

// max-abs of U†U − I against `tol`.
bool is_unitary(const Matrix& u, double tol);

} // namespace qcsim
