#include "qcsim/density.hpp"

#include <cmath>
#include <stdexcept>

namespace qcsim {

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != 2 || m_.cols() != 2)
        throw std::invalid_argument("density matrix must be 2x2");
    if (max_abs(m_ - m_.adjoint()) > 1e-10)
        throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(m_(0, 0) + m_(1, 1) - cplx(1.0)) > 1e-10)
        throw std::invalid_argument("density matrix must have unit trace");
}

DensityMatrix DensityMatrix::pure(const StateVector& v) {
    if (v.n != 1) throw std::invalid_argument("pure density matrix: one-qubit state required");
    Matrix m(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = v.amps[r] * std::conj(v.amps[c]);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pauli(double s0, double s1, double s2, double s3) {
    Matrix m(2, 2);
    m(0, 0) = 0.5 * (s0 + s3);
    m(0, 1) = 0.5 * cplx(s1, -s2);
    m(1, 0) = 0.5 * cplx(s1, s2);
    m(1, 1) = 0.5 * (s0 - s3);
    return DensityMatrix(std::move(m));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    const Matrix d = a.matrix() - b.matrix();
    // Singular values of a 2x2 matrix from the eigenvalues of D†D:
    // λ± = (t ± sqrt(t² − 4·det)) / 2 with t = ‖D‖_F².
    const Matrix g = d.adjoint() * d;
    const double t = g(0, 0).real() + g(1, 1).real();
    const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * det));
    const double s1 = std::sqrt(std::max(0.0, (t + disc) / 2.0));
    const double s2 = std::sqrt(std::max(0.0, (t - disc) / 2.0));
    return 0.5 * (s1 + s2);
}

} // namespace qcsim
