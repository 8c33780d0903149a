#include "qcsim/algorithms.hpp"

#include <stdexcept>

#include "qcsim/simulate.hpp"

namespace qcsim {

Circuit build_teleportation() {
    Circuit qtc(3);
    qtc.push_back(gates::cnot(0, 1));
    qtc.push_back(gates::hadamard(0));
    qtc.push_back(Measurement{0});
    qtc.push_back(Measurement{1});
    qtc.push_back(gates::cnot(1, 2));
    qtc.push_back(gates::cz(0, 2));
    return qtc;
}

Circuit grover_oracle() {
    Circuit oracle(2);
    oracle.push_back(gates::cz(0, 1));
    oracle.as_block("oracle");
    return oracle;
}

Circuit grover_diffuser() {
    Circuit diffuser(2);
    diffuser.push_back(gates::hadamard(0));
    diffuser.push_back(gates::hadamard(1));
    diffuser.push_back(gates::pauli_z(0));
    diffuser.push_back(gates::pauli_z(1));
    diffuser.push_back(gates::cz(0, 1));
    diffuser.push_back(gates::hadamard(0));
    diffuser.push_back(gates::hadamard(1));
    diffuser.as_block("diffuser");
    return diffuser;
}

Circuit build_grover2() {
    Circuit gc(2);
    gc.push_back(gates::hadamard(0));
    gc.push_back(gates::hadamard(1));
    gc.push_back(grover_oracle());
    gc.push_back(grover_diffuser());
    gc.push_back(Measurement{0});
    gc.push_back(Measurement{1});
    return gc;
}

std::optional<int> qec_correction_target(std::string_view syndrome) {
    if (syndrome == "00") return std::nullopt;
    if (syndrome == "01") return 2;
    if (syndrome == "10") return 1;
    if (syndrome == "11") return 0;
    throw std::invalid_argument("syndrome must be two bits");
}

Circuit build_repetition_qec(std::optional<int> errorQubit) {
    if (errorQubit && (*errorQubit < 0 || *errorQubit > 2))
        throw std::invalid_argument("error qubit must be one of the physical qubits 0..2");

    Circuit qec(5);
    qec.push_back(gates::cnot(0, 1));
    qec.push_back(gates::cnot(0, 2));
    if (errorQubit) qec.push_back(gates::pauli_x(*errorQubit));
    qec.push_back(gates::cnot(0, 3));
    qec.push_back(gates::cnot(1, 3));
    qec.push_back(gates::cnot(0, 4));
    qec.push_back(gates::cnot(2, 4));
    qec.push_back(Measurement{3});
    qec.push_back(Measurement{4});
    qec.push_back(gates::mcx({3, 4}, 2, {0, 1}));
    qec.push_back(gates::mcx({3, 4}, 1, {1, 0}));
    qec.push_back(gates::mcx({3, 4}, 0, {1, 1}));
    return qec;
}

namespace {

// P(0) for each of the X, Y, Z measurement bases.
struct BasisProbabilities {
    double x, y, z;
};

std::pair<TomographyCoefficients, DensityMatrix> reconstruct(const BasisProbabilities& p0) {
    TomographyCoefficients s;
    s.s0 = p0.z + (1.0 - p0.z);
    s.s1 = p0.x - (1.0 - p0.x);
    s.s2 = p0.y - (1.0 - p0.y);
    s.s3 = p0.z - (1.0 - p0.z);
    return {s, DensityMatrix::from_pauli(s.s0, s.s1, s.s2, s.s3)};
}

SimulationResult measure_in(const StateVector& v, const Basis& basis) {
    Circuit c(1);
    c.push_back(Measurement{0, basis});
    return simulate(c, v);
}

} // namespace

std::pair<TomographyCoefficients, DensityMatrix>
tomography_estimate(const StateVector& v, long long shots, std::uint64_t seed) {
    if (v.n != 1) throw std::invalid_argument("tomography: one-qubit state required");
    if (shots < 1) throw std::invalid_argument("tomography: shots must be positive");

    const Basis bases[3] = {Basis::x(), Basis::y(), Basis::z()};
    double p0[3];
    for (int b = 0; b < 3; ++b) {
        const auto counts = measure_in(v, bases[b]).counts(shots, seed + std::uint64_t(b));
        const auto it = counts.find("0");
        p0[b] = double(it == counts.end() ? 0 : it->second) / double(shots);
    }
    return reconstruct({p0[0], p0[1], p0[2]});
}

std::pair<TomographyCoefficients, DensityMatrix> tomography_exact(const StateVector& v) {
    if (v.n != 1) throw std::invalid_argument("tomography: one-qubit state required");

    const Basis bases[3] = {Basis::x(), Basis::y(), Basis::z()};
    double p0[3];
    for (int b = 0; b < 3; ++b) {
        p0[b] = 0.0;
        const SimulationResult result = measure_in(v, bases[b]);
        for (const auto& br : result.branches())
            if (br.outcome == "0") p0[b] = br.probability;
    }
    return reconstruct({p0[0], p0[1], p0[2]});
}

} // namespace qcsim
