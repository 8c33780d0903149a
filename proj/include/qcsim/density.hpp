#pragma once

#include "qcsim/matrix.hpp"
#include "qcsim/statevector.hpp"

namespace qcsim {

/// 2x2 single-qubit density matrix: Hermitian with unit trace, both
/// within 1e-10. Positivity is not enforced — finite-shot tomography
/// estimates may violate it.
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix m);

    // |v⟩⟨v| of a one-qubit pure state.
    static DensityMatrix pure(const StateVector& v);

    // ½(s0·I + s1·X + s2·Y + s3·Z).
    static DensityMatrix from_pauli(double s0, double s1, double s2, double s3);

    const Matrix& matrix() const { return m_; }
    cplx operator()(int r, int c) const { return m_(r, c); }

  private:
    Matrix m_;
};

// ½ · Σ singular values of (a − b).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

} // namespace qcsim
