// Compares the OpenMP gate kernels against the serial reference on the
// hot paths: single-qubit, controlled, and two-qubit-window application,
// plus a full random-circuit sweep.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/simulate.hpp"
#include "qcsim/statevector.hpp"

using namespace qcsim;

namespace {

std::vector<cplx> make_state(int n) {
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> gauss;
    std::vector<cplx> amps(std::uint64_t(1) << n);
    double norm = 0.0;
    for (auto& a : amps) {
        a = cplx(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) a /= norm;
    return amps;
}

const cplx kHadamard[4] = {cplx(M_SQRT1_2), cplx(M_SQRT1_2), cplx(M_SQRT1_2), cplx(-M_SQRT1_2)};

void BM_Apply1Q_Serial(benchmark::State& state) {
    const int n = int(state.range(0));
    auto amps = make_state(n);
    for (auto _ : state) {
        ref::apply_1q(amps.data(), amps.size(), n / 2, kHadamard, 0, 0);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}

void BM_Apply1Q_OpenMP(benchmark::State& state) {
    const int n = int(state.range(0));
    auto amps = make_state(n);
    for (auto _ : state) {
        kernels::apply_1q(amps.data(), amps.size(), n / 2, kHadamard, 0, 0);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}

void BM_Controlled_Serial(benchmark::State& state) {
    const int n = int(state.range(0));
    auto amps = make_state(n);
    const std::uint64_t cmask = 1ULL << (n - 1);
    for (auto _ : state) {
        ref::apply_x(amps.data(), amps.size(), 0, cmask, cmask);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}

void BM_Controlled_OpenMP(benchmark::State& state) {
    const int n = int(state.range(0));
    auto amps = make_state(n);
    const std::uint64_t cmask = 1ULL << (n - 1);
    for (auto _ : state) {
        kernels::apply_x(amps.data(), amps.size(), 0, cmask, cmask);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}

Matrix window_unitary() {
    // 2-qubit rotation-like unitary, dense
    Matrix m(4, 4);
    const double c = std::cos(0.3), s = std::sin(0.3);
    m(0, 0) = 1.0;
    m(3, 3) = 1.0;
    m(1, 1) = c;
    m(1, 2) = cplx(0, -s);
    m(2, 1) = cplx(0, -s);
    m(2, 2) = c;
    return m;
}

void BM_Window2Q_Serial(benchmark::State& state) {
    const int n = int(state.range(0));
    auto amps = make_state(n);
    const Matrix m = window_unitary();
    for (auto _ : state) {
        ref::apply_window(amps.data(), amps.size(), n / 2, 2, m, 0, 0);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}

void BM_Window2Q_OpenMP(benchmark::State& state) {
    const int n = int(state.range(0));
    auto amps = make_state(n);
    const Matrix m = window_unitary();
    for (auto _ : state) {
        kernels::apply_window(amps.data(), amps.size(), n / 2, 2, m, 0, 0);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}

Circuit random_dense_circuit(int n, int depth) {
    std::mt19937_64 rng(777);
    Circuit c(n);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-3.14, 3.14);
    for (int i = 0; i < depth; ++i) {
        switch (rng() % 4) {
            case 0: c.push_back(gates::hadamard(qubit(rng))); break;
            case 1: c.push_back(gates::rx(angle(rng), qubit(rng))); break;
            case 2: c.push_back(gates::rz(angle(rng), qubit(rng))); break;
            default: {
                int control = qubit(rng), target = qubit(rng);
                while (target == control) target = qubit(rng);
                c.push_back(gates::cnot(control, target));
            }
        }
    }
    return c;
}

// Full simulate() sweep; the engine always runs the OpenMP kernels, so
// the serial baseline drives the reference kernels directly.
void BM_Circuit_OpenMP(benchmark::State& state) {
    const int n = int(state.range(0));
    const Circuit c = random_dense_circuit(n, 100);
    for (auto _ : state) {
        auto result = simulate(c, std::string(std::size_t(n), '0'));
        benchmark::DoNotOptimize(result);
    }
}

void BM_Circuit_Serial(benchmark::State& state) {
    const int n = int(state.range(0));
    const Circuit c = random_dense_circuit(n, 100);
    for (auto _ : state) {
        StateVector s = init_state(std::string(std::size_t(n), '0'));
        for (const auto& instr : c.instructions()) {
            const Gate& g = std::get<Gate>(instr);
            std::uint64_t cmask = 0, cval = 0;
            for (const auto& ctl : g.controls) {
                cmask |= 1ULL << (n - 1 - ctl.qubit);
                if (ctl.state) cval |= 1ULL << (n - 1 - ctl.qubit);
            }
            const Matrix m = g.base_matrix();
            const cplx flat[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
            ref::apply_1q(s.amps.data(), s.dim(), n - 1 - g.targets[0], flat, cmask, cval);
        }
        benchmark::DoNotOptimize(s);
    }
}

} // namespace

BENCHMARK(BM_Apply1Q_Serial)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(BM_Apply1Q_OpenMP)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(BM_Controlled_Serial)->Arg(20)->Arg(22);
BENCHMARK(BM_Controlled_OpenMP)->Arg(20)->Arg(22);
BENCHMARK(BM_Window2Q_Serial)->Arg(20)->Arg(22);
BENCHMARK(BM_Window2Q_OpenMP)->Arg(20)->Arg(22);
BENCHMARK(BM_Circuit_Serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Circuit_OpenMP)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
