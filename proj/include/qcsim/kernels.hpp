#pragma once

#include <complex>
#include <cstdint>

#include "qcsim/matrix.hpp"

namespace qcsim {

// Amplitude-array gate kernels. Qubit q of an n-qubit register lives at
// bit position n-1-q of the basis index (qubit 0 is most significant).
// `cmask`/`cval` encode polarized controls: a pair is touched only when
// (index & cmask) == cval. All kernels are in-place.
//
// qcsim::kernels is the OpenMP-parallel production path; qcsim::ref is
// the serial reference kept for testing and benchmarking against it.

namespace kernels {

// Generic 2x2 on the qubit at `bit`; m is row-major.
void apply_1q(cplx* amps, std::uint64_t dim, int bit, const cplx m[4],
              std::uint64_t cmask, std::uint64_t cval);

// Fast path: amplitude swap (X).
void apply_x(cplx* amps, std::uint64_t dim, int bit,
             std::uint64_t cmask, std::uint64_t cval);

// Fast path: diag(1, phase) (Z, S, Sdg, T, Tdg).
void apply_phase(cplx* amps, std::uint64_t dim, int bit, cplx phase,
                 std::uint64_t cmask, std::uint64_t cval);

// Dense 2^k x 2^k on a contiguous bit field [low, low+k); the field's
// top bit is the matrix row MSB.
void apply_window(cplx* amps, std::uint64_t dim, int low, int k, const Matrix& m,
                  std::uint64_t cmask, std::uint64_t cval);

// Probability of reading 0 at `bit` (sum of |amp|^2 with the bit clear).
double prob_zero(const cplx* amps, std::uint64_t dim, int bit);

double norm_sq(const cplx* amps, std::uint64_t dim);

// Projects onto `outcome` at `bit` and rescales surviving amplitudes.
void collapse(cplx* amps, std::uint64_t dim, int bit, int outcome, double scale);

} // namespace kernels

namespace ref {

void apply_1q(cplx* amps, std::uint64_t dim, int bit, const cplx m[4],
              std::uint64_t cmask, std::uint64_t cval);
void apply_x(cplx* amps, std::uint64_t dim, int bit,
             std::uint64_t cmask, std::uint64_t cval);
void apply_phase(cplx* amps, std::uint64_t dim, int bit, cplx phase,
                 std::uint64_t cmask, std::uint64_t cval);
void apply_window(cplx* amps, std::uint64_t dim, int low, int k, const Matrix& m,
                  std::uint64_t cmask, std::uint64_t cval);
double prob_zero(const cplx* amps, std::uint64_t dim, int bit);
double norm_sq(const cplx* amps, std::uint64_t dim);
void collapse(cplx* amps, std::uint64_t dim, int bit, int outcome, double scale);

} // namespace ref

} // namespace qcsim
