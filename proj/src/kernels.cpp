#include "qcsim/kernels.hpp"

#include <vector>

namespace qcsim {

namespace {

// Below this many iterations the OpenMP fork/join overhead dominates.
constexpr std::int64_t kParallelCutoff = 1 << 12;

// i-th index whose `bit` is clear: insert a 0 bit at position `bit`.
inline std::uint64_t expand(std::uint64_t i, int bit) {
    const std::uint64_t lo = (std::uint64_t(1) << bit) - 1;
    return ((i & ~lo) << 1) | (i & lo);
}

// i-th index whose window [low, low+k) is clear.
inline std::uint64_t expand_window(std::uint64_t i, int low, int k) {
    const std::uint64_t lo = (std::uint64_t(1) << low) - 1;
    return ((i & ~lo) << k) | (i & lo);
}

} // namespace

namespace kernels {

void apply_1q(cplx* amps, std::uint64_t dim, int bit, const cplx m[4],
              std::uint64_t cmask, std::uint64_t cval) {
    const std::int64_t pairs = std::int64_t(dim >> 1);
    const std::uint64_t mask = std::uint64_t(1) << bit;
#pragma omp parallel for schedule(static) if (pairs >= kParallelCutoff)
    for (std::int64_t i = 0; i < pairs; ++i) {
        const std::uint64_t i0 = expand(std::uint64_t(i), bit);
        if ((i0 & cmask) != cval) continue;
        const std::uint64_t i1 = i0 | mask;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_x(cplx* amps, std::uint64_t dim, int bit,
             std::uint64_t cmask, std::uint64_t cval) {
    const std::int64_t pairs = std::int64_t(dim >> 1);
    const std::uint64_t mask = std::uint64_t(1) << bit;
#pragma omp parallel for schedule(static) if (pairs >= kParallelCutoff)
    for (std::int64_t i = 0; i < pairs; ++i) {
        const std::uint64_t i0 = expand(std::uint64_t(i), bit);
        if ((i0 & cmask) != cval) continue;
        const std::uint64_t i1 = i0 | mask;
        const cplx a0 = amps[i0];
        amps[i0] = amps[i1];
        amps[i1] = a0;
    }
}

void apply_phase(cplx* amps, std::uint64_t dim, int bit, cplx phase,
                 std::uint64_t cmask, std::uint64_t cval) {
    const std::int64_t pairs = std::int64_t(dim >> 1);
    const std::uint64_t mask = std::uint64_t(1) << bit;
#pragma omp parallel for schedule(static) if (pairs >= kParallelCutoff)
    for (std::int64_t i = 0; i < pairs; ++i) {
        const std::uint64_t i0 = expand(std::uint64_t(i), bit);
        if ((i0 & cmask) != cval) continue;
        amps[i0 | mask] *= phase;
    }
}

void apply_window(cplx* amps, std::uint64_t dim, int low, int k, const Matrix& m,
                  std::uint64_t cmask, std::uint64_t cval) {
    const std::int64_t bases = std::int64_t(dim >> k);
    const std::uint64_t wdim = std::uint64_t(1) << k;
#pragma omp parallel if (bases >= kParallelCutoff)
    {
        std::vector<cplx> in(wdim);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < bases; ++b) {
            const std::uint64_t base = expand_window(std::uint64_t(b), low, k);
            if ((base & cmask) != cval) continue;
            for (std::uint64_t w = 0; w < wdim; ++w) in[w] = amps[base | (w << low)];
            for (std::uint64_t r = 0; r < wdim; ++r) {
                cplx acc{};
                for (std::uint64_t w = 0; w < wdim; ++w) acc += m(int(r), int(w)) * in[w];
                amps[base | (r << low)] = acc;
            }
        }
    }
}

double prob_zero(const cplx* amps, std::uint64_t dim, int bit) {
    const std::int64_t pairs = std::int64_t(dim >> 1);
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p) if (pairs >= kParallelCutoff)
    for (std::int64_t i = 0; i < pairs; ++i) {
        const std::uint64_t i0 = expand(std::uint64_t(i), bit);
        p += std::norm(amps[i0]);
    }
    return p;
}

double norm_sq(const cplx* amps, std::uint64_t dim) {
    const std::int64_t total = std::int64_t(dim);
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p) if (total >= kParallelCutoff)
    for (std::int64_t i = 0; i < total; ++i) p += std::norm(amps[i]);
    return p;
}

void collapse(cplx* amps, std::uint64_t dim, int bit, int outcome, double scale) {
    const std::int64_t total = std::int64_t(dim);
#pragma omp parallel for schedule(static) if (total >= kParallelCutoff)
    for (std::int64_t i = 0; i < total; ++i) {
        if (int((std::uint64_t(i) >> bit) & 1) == outcome)
            amps[i] *= scale;
        else
            amps[i] = cplx{};
    }
}

} // namespace kernels

namespace ref {

void apply_1q(cplx* amps, std::uint64_t dim, int bit, const cplx m[4],
              std::uint64_t cmask, std::uint64_t cval) {
    const std::uint64_t mask = std::uint64_t(1) << bit;
    for (std::uint64_t i = 0; i < dim >> 1; ++i) {
        const std::uint64_t i0 = expand(i, bit);
        if ((i0 & cmask) != cval) continue;
        const std::uint64_t i1 = i0 | mask;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_x(cplx* amps, std::uint64_t dim, int bit,
             std::uint64_t cmask, std::uint64_t cval) {
    const cplx m[4] = {0, 1, 1, 0};
    apply_1q(amps, dim, bit, m, cmask, cval);
}

void apply_phase(cplx* amps, std::uint64_t dim, int bit, cplx phase,
                 std::uint64_t cmask, std::uint64_t cval) {
    const cplx m[4] = {1, 0, 0, phase};
    apply_1q(amps, dim, bit, m, cmask, cval);
}

void apply_window(cplx* amps, std::uint64_t dim, int low, int k, const Matrix& m,
                  std::uint64_t cmask, std::uint64_t cval) {
    const std::uint64_t wdim = std::uint64_t(1) << k;
    std::vector<cplx> in(wdim);
    for (std::uint64_t b = 0; b < dim >> k; ++b) {
        const std::uint64_t base = expand_window(b, low, k);
        if ((base & cmask) != cval) continue;
        for (std::uint64_t w = 0; w < wdim; ++w) in[w] = amps[base | (w << low)];
        for (std::uint64_t r = 0; r < wdim; ++r) {
            cplx acc{};
            for (std::uint64_t w = 0; w < wdim; ++w) acc += m(int(r), int(w)) * in[w];
            amps[base | (r << low)] = acc;
        }
    }
}

double prob_zero(const cplx* amps, std::uint64_t dim, int bit) {
    double p = 0.0;
    for (std::uint64_t i = 0; i < dim >> 1; ++i) p += std::norm(amps[expand(i, bit)]);
    return p;
}

double norm_sq(const cplx* amps, std::uint64_t dim) {
    double p = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) p += std::norm(amps[i]);
    return p;
}

void collapse(cplx* amps, std::uint64_t dim, int bit, int outcome, double scale) {
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (int((i >> bit) & 1) == outcome)
            amps[i] *= scale;
        else
            amps[i] = cplx{};
    }
}

} // namespace ref

} // namespace qcsim
