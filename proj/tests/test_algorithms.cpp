#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qcsim/algorithms.hpp"
#include "qcsim/simulate.hpp"
#include "qcsim/unitary.hpp"
#include "test_util.hpp"

using namespace qcsim;
using testutil::max_abs_diff;
using testutil::phase_aligned_diff;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector plus_i_state() {
    return init_state(std::vector<cplx>{kInvSqrt2, cplx(0, kInvSqrt2)}, 1);
}

std::vector<cplx> kron_vec(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

std::vector<cplx> bell_pair() {
    return {kInvSqrt2, 0, 0, kInvSqrt2};
}

double teleport_fidelity(const StateVector& reduced, const StateVector& v) {
    cplx inner{};
    for (int i = 0; i < 2; ++i) inner += std::conj(v.amps[i]) * reduced.amps[i];
    return std::abs(inner);
}

} // namespace

TEST_CASE("teleportation: four uniform branches, v lands on q2") {
    const Circuit qtc = build_teleportation();
    REQUIRE(qtc.nb_qubits() == 3);
    REQUIRE(qtc.instructions().size() == 6);

    const StateVector v = plus_i_state();
    const auto result = simulate(qtc, kron_vec(v.amps, bell_pair()));

    REQUIRE(result.branches().size() == 4);
    const char* expected[4] = {"00", "01", "10", "11"};
    for (int i = 0; i < 4; ++i) {
        CHECK(result.branches()[i].outcome == expected[i]);
        CHECK(result.branches()[i].probability == doctest::Approx(0.25).epsilon(1e-12));
    }

    // branch '00' full state is [0.7071, 0.7071i, 0, ...]
    std::vector<cplx> full(8);
    full[0] = kInvSqrt2;
    full[1] = cplx(0, kInvSqrt2);
    CHECK(max_abs_diff(result.branches()[0].state.amps, full) < 1e-10);

    const std::vector<int> known = {0, 1};
    for (const auto& br : result.branches()) {
        const StateVector reduced = reduced_statevector(br.state, known, br.outcome);
        CHECK(teleport_fidelity(reduced, v) == doctest::Approx(1.0).epsilon(1e-10));
    }

    // mid-circuit measurements: reducedStates is not applicable here
    CHECK_FALSE(result.has_reduced_states());
}

TEST_CASE("teleportation of a basis state") {
    const auto result =
        simulate(build_teleportation(), kron_vec({1, 0}, bell_pair()));
    const auto& first = result.branches().front();
    CHECK(first.outcome == "00");
    const std::vector<int> known = {0, 1};
    const StateVector reduced = reduced_statevector(first.state, known, first.outcome);
    CHECK(max_abs_diff(reduced.amps, std::vector<cplx>{1, 0}) < 1e-10);
}

TEST_CASE("property: teleportation fidelity is exact for random states") {
    std::mt19937_64 rng(1234);
    const Circuit qtc = build_teleportation();
    const std::vector<int> known = {0, 1};
    for (int iter = 0; iter < 50; ++iter) {
        const StateVector v = testutil::random_state(1, rng);
        const auto result = simulate(qtc, kron_vec(v.amps, bell_pair()));
        REQUIRE(result.branches().size() == 4);
        for (const auto& br : result.branches()) {
            const StateVector reduced = reduced_statevector(br.state, known, br.outcome);
            CHECK(teleport_fidelity(reduced, v) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("grover finds |11> with certainty") {
    const Circuit gc = build_grover2();
    const auto result = simulate(gc, "00");
    REQUIRE(result.branches().size() == 1);
    CHECK(result.branches()[0].outcome == "11");
    CHECK(result.branches()[0].probability == doctest::Approx(1.0).epsilon(1e-12));

    const auto counts = result.counts(32, 5);
    CHECK(counts.at("11") == 32);
}

TEST_CASE("grover pre-measurement state is |11> up to phase (dense oracle)") {
    Circuit noMeasure(2);
    noMeasure.push_back(gates::hadamard(0));
    noMeasure.push_back(gates::hadamard(1));
    noMeasure.push_back(grover_oracle(), 0);
    noMeasure.push_back(grover_diffuser(), 0);

    const auto state = circuit_unitary(noMeasure).apply(std::vector<cplx>{1, 0, 0, 0});
    CHECK(phase_aligned_diff(state, std::vector<cplx>{0, 0, 0, 1}) < 1e-12);

    const auto result = simulate(noMeasure, "00");
    CHECK(phase_aligned_diff(result.branches()[0].state.amps,
                             std::vector<cplx>{0, 0, 0, 1}) < 1e-12);
}

TEST_CASE("grover subcircuits are marked as blocks") {
    CHECK(grover_oracle().draw_as_block());
    CHECK(grover_oracle().label() == "oracle");
    CHECK(grover_diffuser().draw_as_block());
    CHECK(grover_diffuser().label() == "diffuser");
    REQUIRE(grover_oracle().instructions().size() == 1);
    REQUIRE(grover_diffuser().instructions().size() == 7);
}

TEST_CASE("qec syndrome table") {
    CHECK(qec_correction_target("00") == std::nullopt);
    CHECK(qec_correction_target("01") == 2);
    CHECK(qec_correction_target("10") == 1);
    CHECK(qec_correction_target("11") == 0);
    CHECK_THROWS_AS(qec_correction_target("2"), std::invalid_argument);
}

TEST_CASE("qec: error on q0 gives syndrome 11") {
    const Circuit qec = build_repetition_qec(0);
    std::vector<cplx> e0(16);
    e0[0] = 1.0;
    const auto result = simulate(qec, kron_vec(plus_i_state().amps, e0));
    REQUIRE(result.branches().size() == 1);
    CHECK(result.branches()[0].outcome == "11");
    CHECK(result.branches()[0].probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qec without an error leaves a trivial syndrome") {
    const Circuit qec = build_repetition_qec(std::nullopt);
    std::vector<cplx> e0(16);
    e0[0] = 1.0;
    const StateVector v = plus_i_state();
    const auto result = simulate(qec, kron_vec(v.amps, e0));
    REQUIRE(result.branches().size() == 1);
    CHECK(result.branches()[0].outcome == "00");

    // physical state is α|000> + β|111> on q0..q2 with ancillas at |00>
    std::vector<cplx> expected(32);
    expected[0] = v.amps[0];                  // |000 00>
    expected[0b11100] = v.amps[1];            // |111 00>
    CHECK(max_abs_diff(result.branches()[0].state.amps, expected) < 1e-10);
}

TEST_CASE("qec rejects invalid error locations") {
    CHECK_THROWS_AS(build_repetition_qec(3), std::invalid_argument);
    CHECK_THROWS_AS(build_repetition_qec(-1), std::invalid_argument);
}

TEST_CASE("property: qec corrects every single bit flip for random states") {
    std::mt19937_64 rng(4321);
    const std::optional<int> cases[4] = {std::nullopt, 0, 1, 2};
    const char* syndromes[4] = {"00", "11", "10", "01"};
    for (int e = 0; e < 4; ++e) {
        const Circuit qec = build_repetition_qec(cases[e]);
        for (int iter = 0; iter < 20; ++iter) {
            const StateVector v = testutil::random_state(1, rng);
            std::vector<cplx> e0(16);
            e0[0] = 1.0;
            const auto result = simulate(qec, kron_vec(v.amps, e0));
            REQUIRE(result.branches().size() == 1);
            CHECK(result.branches()[0].outcome == syndromes[e]);

            // restored physical state: α|000> + β|111> with the ancillas
            // fixed at the syndrome
            const std::vector<int> ancillas = {3, 4};
            const StateVector physical = reduced_statevector(
                result.branches()[0].state, ancillas, result.branches()[0].outcome);
            std::vector<cplx> logical(8);
            logical[0] = v.amps[0];
            logical[7] = v.amps[1];
            CHECK(max_abs_diff(physical.amps, logical) < 1e-10);
        }
    }
}

TEST_CASE("tomography: exact probabilities reproduce the density matrix") {
    const auto [s, rho] = tomography_exact(plus_i_state());
    CHECK(s.s0 == 1.0);
    CHECK(std::abs(s.s1) < 1e-12);
    CHECK(s.s2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s.s3) < 1e-12);

    // ρ_v = [[0.5, -0.5i], [0.5i, 0.5]]
    CHECK(std::abs(rho(0, 0) - cplx(0.5)) < 1e-12);
    CHECK(std::abs(rho(0, 1) - cplx(0, -0.5)) < 1e-12);
    CHECK(std::abs(rho(1, 0) - cplx(0, 0.5)) < 1e-12);
    CHECK(std::abs(rho(1, 1) - cplx(0.5)) < 1e-12);

    CHECK(trace_distance(rho, DensityMatrix::pure(plus_i_state())) < 1e-12);
}

TEST_CASE("tomography: basis states pin S3 at every shot count") {
    for (long long shots : {1LL, 10LL, 1000LL}) {
        const auto [s, rho] = tomography_estimate(init_state("0"), shots, 17);
        CHECK(s.s0 == 1.0);
        CHECK(s.s3 == 1.0);
        CHECK(rho(0, 0).real() == doctest::Approx(1.0));
        CHECK(rho(1, 1).real() == doctest::Approx(0.0));
    }
}

TEST_CASE("tomography: finite shots land near the true state") {
    const DensityMatrix truth = DensityMatrix::pure(plus_i_state());
    const auto [s, rho] = tomography_estimate(plus_i_state(), 1000, 1);
    CHECK(s.s0 == 1.0);
    CHECK(std::abs(s.s1) <= 1.0);
    CHECK(std::abs(s.s2) <= 1.0);
    CHECK(std::abs(s.s3) <= 1.0);
    CHECK(trace_distance(truth, rho) < 0.1);
}

TEST_CASE("tomography: estimates are deterministic per seed") {
    const auto a = tomography_estimate(plus_i_state(), 500, 99);
    const auto b = tomography_estimate(plus_i_state(), 500, 99);
    CHECK(a.first.s1 == b.first.s1);
    CHECK(a.first.s2 == b.first.s2);
    CHECK(a.first.s3 == b.first.s3);
}

TEST_CASE("property: tomography error shrinks like shots^(-1/2)") {
    const DensityMatrix truth = DensityMatrix::pure(plus_i_state());
    std::vector<double> small, large;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        small.push_back(trace_distance(truth, tomography_estimate(plus_i_state(), 100, seed).second));
        large.push_back(
            trace_distance(truth, tomography_estimate(plus_i_state(), 10000, seed).second));
    }
    auto median = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        return (v[49] + v[50]) / 2.0;
    };
    const double ratio = median(small) / median(large);
    CHECK(ratio >= 5.0);
    CHECK(ratio <= 20.0);
}
