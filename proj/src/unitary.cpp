#include "qcsim/unitary.hpp"

#include <cstdint>
#include <string>

#include "qcsim/errors.hpp"

namespace qcsim {

namespace {

bool controls_satisfied(std::uint64_t index, const Gate& g, int nbQubits, int offset) {
    for (const auto& c : g.controls) {
        const int bit = nbQubits - 1 - (c.qubit + offset);
        if (int((index >> bit) & 1) != c.state) return false;
    }
    return true;
}

void accumulate(Matrix& total, const Circuit& c, int nbQubits, int offset);

struct Accumulator {
    Matrix& total;
    int nbQubits;
    int offset;

    void operator()(const Gate& g) const {
        total = embedded_gate_unitary(g, nbQubits, offset) * total;
    }

    void operator()(const Measurement&) const {
        throw unsupported_operation("circuit_unitary: circuit contains a measurement");
    }

    void operator()(const Block& b) const {
        accumulate(total, *b.circuit, nbQubits, offset + b.offset);
    }
};

void accumulate(Matrix& total, const Circuit& c, int nbQubits, int offset) {
    for (const auto& instr : c.instructions()) std::visit(Accumulator{total, nbQubits, offset}, instr);
}

} // namespace

Matrix embedded_gate_unitary(const Gate& g, int nbQubits, int offset) {
    const int firstTarget = g.targets.front() + offset;
    const int k = int(g.targets.size());
    const Matrix left = Matrix::identity(1 << firstTarget);
    const Matrix right = Matrix::identity(1 << (nbQubits - firstTarget - k));
    Matrix embedded = kron(kron(left, g.base_matrix()), right);
    if (g.controls.empty()) return embedded;

    // E = U'_emb · P + (I − P) with P the diagonal projector onto
    // control-satisfying basis states: keep U'_emb columns where the
    // controls hold, identity columns elsewhere.
    const std::uint64_t dim = std::uint64_t(1) << nbQubits;
    Matrix out{int(dim), int(dim)};
    for (std::uint64_t j = 0; j < dim; ++j) {
        if (controls_satisfied(j, g, nbQubits, offset)) {
            for (std::uint64_t i = 0; i < dim; ++i) out(int(i), int(j)) = embedded(int(i), int(j));
        } else {
            out(int(j), int(j)) = 1.0;
        }
    }
    return out;
}

Matrix circuit_unitary(const Circuit& c, int maxQubits) {
    if (c.nb_qubits() > maxQubits)
        throw resource_limit_error("circuit_unitary: " + std::to_string(c.nb_qubits()) +
                                   " qubits exceeds cap of " + std::to_string(maxQubits));
    Matrix total = Matrix::identity(1 << c.nb_qubits());
    accumulate(total, c, c.nb_qubits(), 0);
    return total;
}

} // namespace qcsim
