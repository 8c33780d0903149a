#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcsim/circuit.hpp"
#include "qcsim/errors.hpp"
#include "qcsim/simulate.hpp"
#include "qcsim/unitary.hpp"
#include "test_util.hpp"

using namespace qcsim;
using testutil::max_abs_diff;
using testutil::phase_aligned_diff;

TEST_CASE("circuit construction") {
    Circuit two(2);
    CHECK(two.nb_qubits() == 2);
    CHECK(two.instructions().empty());
    CHECK_FALSE(two.draw_as_block());

    Circuit one(1);
    CHECK(one.nb_qubits() == 1);

    CHECK_THROWS_AS(Circuit(0), std::invalid_argument);
}

TEST_CASE("push_back validates eagerly") {
    Circuit c(2);
    c.push_back(gates::hadamard(0));
    CHECK(c.instructions().size() == 1);
    c.push_back(gates::cnot(0, 1));
    CHECK(c.instructions().size() == 2);

    CHECK_THROWS_AS(c.push_back(gates::hadamard(5)), std::invalid_argument);
    CHECK_THROWS_AS(c.push_back(gates::cnot(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(c.push_back(gates::mcx({0, 0}, 1, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(c.push_back(Measurement{2}), std::invalid_argument);
    CHECK(c.instructions().size() == 2);
}

TEST_CASE("gate matrices") {
    const double s = 1.0 / std::sqrt(2.0);
    const Matrix h = gate_matrix(GateKind::H);
    CHECK(h(0, 0) == cplx(s));
    CHECK(h(0, 1) == cplx(s));
    CHECK(h(1, 0) == cplx(s));
    CHECK(h(1, 1) == cplx(-s));

    const Matrix x = gate_matrix(GateKind::X);
    CHECK(x(0, 0) == cplx(0.0));
    CHECK(x(0, 1) == cplx(1.0));
    CHECK(x(1, 0) == cplx(1.0));
    CHECK(x(1, 1) == cplx(0.0));

    CHECK(max_abs(gate_matrix(GateKind::RZ, 0.0) - Matrix::identity(2)) == 0.0);

    for (GateKind k : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z, GateKind::S,
                       GateKind::Sdg, GateKind::T, GateKind::Tdg})
        CHECK(is_unitary(gate_matrix(k), 1e-14));
    for (double theta : {0.3, -2.7, 11.0}) {
        CHECK(is_unitary(gate_matrix(GateKind::RX, theta), 1e-14));
        CHECK(is_unitary(gate_matrix(GateKind::RY, theta), 1e-14));
        CHECK(is_unitary(gate_matrix(GateKind::RZ, theta), 1e-14));
    }
}

TEST_CASE("custom gate validation") {
    std::mt19937_64 rng(11);
    CHECK_NOTHROW(gates::custom(testutil::random_unitary(4, rng), {0, 1}));

    // breaks unitarity beyond the 1e-10 gate tolerance
    Matrix bad = testutil::random_unitary(2, rng);
    bad(0, 0) += 1e-6;
    CHECK_THROWS_AS(gates::custom(bad, {0}), std::invalid_argument);

    Matrix ok = testutil::random_unitary(4, rng);
    CHECK_THROWS_AS(gates::custom(ok, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(gates::custom(Matrix::identity(3), {0, 1}), std::invalid_argument);
}

TEST_CASE("blocks: offset semantics and validation") {
    Circuit sub(1);
    sub.push_back(gates::pauli_x(0));

    Circuit parent(3);
    parent.push_back(sub, 2);
    const auto result = simulate(parent, "000");
    REQUIRE(result.branches().size() == 1);
    CHECK(result.branches()[0].state == init_state("001"));

    // block simulation matches the manually flattened circuit
    Circuit inner(2);
    inner.push_back(gates::hadamard(0));
    inner.push_back(gates::cnot(0, 1));
    Circuit outer(3);
    outer.push_back(gates::hadamard(0));
    outer.push_back(inner, 1);
    const Circuit flat = flattened(outer);
    REQUIRE(flat.instructions().size() == 3);
    const auto viaBlock = simulate(outer, "000");
    const auto viaFlat = simulate(flat, "000");
    CHECK(max_abs_diff(viaBlock.branches()[0].state.amps, viaFlat.branches()[0].state.amps) ==
          0.0);

    Circuit tooBig(2);
    Circuit host(2);
    CHECK_THROWS_AS(host.push_back(tooBig, 1), std::invalid_argument);
}

TEST_CASE("as_block only affects rendering") {
    Circuit oracle(2);
    oracle.push_back(gates::cz(0, 1));

    Circuit before(2);
    before.push_back(gates::hadamard(0));
    before.push_back(oracle, 0);
    const auto plain = simulate(before, "00");

    oracle.as_block("oracle");
    CHECK(oracle.draw_as_block());
    CHECK(oracle.label() == "oracle");

    Circuit after(2);
    after.push_back(gates::hadamard(0));
    after.push_back(oracle, 0);
    const auto boxed = simulate(after, "00");

    REQUIRE(plain.branches().size() == boxed.branches().size());
    for (std::size_t i = 0; i < plain.branches().size(); ++i)
        CHECK(plain.branches()[i].state == boxed.branches()[i].state);

    oracle.un_block();
    CHECK_FALSE(oracle.draw_as_block());
    CHECK(oracle.label().empty());
}

TEST_CASE("circuit_unitary basics") {
    Circuit hh(1);
    hh.push_back(gates::hadamard(0));
    hh.push_back(gates::hadamard(0));
    CHECK(max_abs(circuit_unitary(hh) - Matrix::identity(2)) < 1e-12);

    Circuit bell(2);
    bell.push_back(gates::hadamard(0));
    bell.push_back(gates::cnot(0, 1));
    const Matrix u = circuit_unitary(bell);
    const std::vector<cplx> e0 = {1, 0, 0, 0};
    const auto out = u.apply(e0);
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<cplx> expected = {s, 0, 0, s};
    CHECK(max_abs_diff(out, expected) < 1e-12);
}

TEST_CASE("circuit_unitary rejects measurements and oversized circuits") {
    Circuit c(1);
    c.push_back(Measurement{0});
    CHECK_THROWS_AS(circuit_unitary(c), unsupported_operation);

    Circuit big(11);
    CHECK_THROWS_AS(circuit_unitary(big), resource_limit_error);
    CHECK_NOTHROW(circuit_unitary(big, 11));
}

// Dense-algebra oracle for the Grover diffuser: H⊗H · (2|00><00| − I) · H⊗H.
TEST_CASE("diffuser equals the reflection about the mean") {
    Circuit diffuser(2);
    diffuser.push_back(gates::hadamard(0));
    diffuser.push_back(gates::hadamard(1));
    diffuser.push_back(gates::pauli_z(0));
    diffuser.push_back(gates::pauli_z(1));
    diffuser.push_back(gates::cz(0, 1));
    diffuser.push_back(gates::hadamard(0));
    diffuser.push_back(gates::hadamard(1));
    const Matrix got = circuit_unitary(diffuser);

    const Matrix hh = kron(gate_matrix(GateKind::H), gate_matrix(GateKind::H));
    Matrix reflect{4, 4};
    reflect(0, 0) = 2.0;
    const Matrix want = hh * (reflect - Matrix::identity(4)) * hh;

    // compare up to global phase via columns of want† · got
    const Matrix rel = want.adjoint() * got;
    const cplx phase = rel(0, 0) / std::abs(rel(0, 0));
    CHECK(max_abs(rel - Matrix::identity(4) * phase) < 1e-12);
}

TEST_CASE("simulate equals circuit_unitary on measurement-free circuits") {
    std::mt19937_64 rng(202);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 1 + int(rng() % 6);
        const int depth = 1 + int(rng() % 20);
        const Circuit c = testutil::random_circuit(n, depth, rng);
        const auto initial = testutil::random_amplitudes(n, rng);

        const auto result = simulate(c, initial);
        REQUIRE(result.branches().size() == 1);
        const auto expected = circuit_unitary(c).apply(initial);
        CHECK(max_abs_diff(result.branches()[0].state.amps, expected) < 1e-12);
    }
}

// Any instruction accepted by push_back must simulate without errors.
TEST_CASE("instruction validation is total") {
    std::mt19937_64 rng(303);
    int accepted = 0;
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 1 + int(rng() % 4);
        Circuit c(n);
        try {
            c.push_back(testutil::random_gate(n + 1, rng)); // may index out of range
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++accepted;
        CHECK_NOTHROW(simulate(c, testutil::random_state(n, rng)));
    }
    CHECK(accepted > 50);
}
