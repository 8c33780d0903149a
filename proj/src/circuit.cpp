#include "qcsim/circuit.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "qcsim/errors.hpp"

namespace qcsim {

Basis Basis::custom(Matrix b) {
    if (b.rows() != 2 || b.cols() != 2)
        throw std::invalid_argument("custom basis: matrix must be 2x2");
    if (!is_unitary(b, kUnitaryTolerance))
        throw std::invalid_argument("custom basis: matrix is not unitary within tolerance");
    Basis out(Kind::Custom);
    out.custom_ = std::move(b);
    return out;
}

Matrix Basis::change_matrix() const {
    switch (kind_) {
        case Kind::Z:
            return Matrix::identity(2);
        case Kind::X:
            return gate_matrix(GateKind::H);
        case Kind::Y:
            return gate_matrix(GateKind::H) * gate_matrix(GateKind::Sdg);
        case Kind::Custom:
            return custom_;
    }
    return Matrix::identity(2);
}

char Basis::letter() const {
    switch (kind_) {
        case Kind::Z: return 'z';
        case Kind::X: return 'x';
        case Kind::Y: return 'y';
        case Kind::Custom: return 'c';
    }
    return '?';
}

bool operator==(const Block& a, const Block& b) {
    if (a.offset != b.offset) return false;
    if (a.circuit == b.circuit) return true;
    if (!a.circuit || !b.circuit) return false;
    return *a.circuit == *b.circuit;
}

Circuit::Circuit(int nbQubits) : nb_qubits_(nbQubits) {
    if (nbQubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

void Circuit::push_back(Instruction instr) {
    validate_instruction(instr, nb_qubits_);
    instructions_.push_back(std::move(instr));
}

void Circuit::push_back(const Circuit& sub, int offset) {
    push_back(Block{std::make_shared<Circuit>(sub), offset});
}

void Circuit::as_block(std::string label) {
    draw_as_block_ = true;
    label_ = std::move(label);
}

void Circuit::un_block() {
    draw_as_block_ = false;
    label_.clear();
}

namespace {

void check_index(int q, int nbQubits, const char* what) {
    if (q < 0 || q >= nbQubits)
        throw std::invalid_argument(std::string(what) + " qubit " + std::to_string(q) +
                                    " out of range for " + std::to_string(nbQubits) + " qubits");
}

void validate_gate(const Gate& g, int nbQubits) {
    if (g.targets.empty()) throw std::invalid_argument("gate has no target qubits");
    if (g.kind != GateKind::Custom && g.targets.size() != 1)
        throw std::invalid_argument("named gates take exactly one target");
    std::set<int> seen;
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
        check_index(g.targets[i], nbQubits, "target");
        if (g.kind == GateKind::Custom && i > 0 && g.targets[i] != g.targets[i - 1] + 1)
            throw std::invalid_argument("custom gate targets must be contiguous ascending");
        if (!seen.insert(g.targets[i]).second)
            throw std::invalid_argument("duplicate target qubit " + std::to_string(g.targets[i]));
    }
    for (const auto& c : g.controls) {
        check_index(c.qubit, nbQubits, "control");
        if (c.state != 0 && c.state != 1)
            throw std::invalid_argument("control state must be 0 or 1");
        if (!seen.insert(c.qubit).second)
            throw std::invalid_argument("control qubit " + std::to_string(c.qubit) +
                                        " duplicates a control or target");
    }
    if (g.kind == GateKind::Custom) {
        const long long dim = 1LL << g.targets.size();
        if (g.custom.rows() != dim || g.custom.cols() != dim)
            throw std::invalid_argument("custom gate matrix dimension mismatch");
        if (!is_unitary(g.custom, kUnitaryTolerance))
            throw std::invalid_argument("custom gate matrix is not unitary within tolerance");
    }
}

struct Validator {
    int nbQubits;

    void operator()(const Gate& g) const { validate_gate(g, nbQubits); }

    void operator()(const Measurement& m) const {
        check_index(m.qubit, nbQubits, "measured");
        if (m.basis.kind() == Basis::Kind::Custom && !is_unitary(m.basis.change_matrix(), kUnitaryTolerance))
            throw std::invalid_argument("measurement basis is not unitary within tolerance");
    }

    void operator()(const Block& b) const {
        if (!b.circuit) throw std::invalid_argument("block holds no circuit");
        if (b.offset < 0) throw std::invalid_argument("block offset must be non-negative");
        if (b.offset + b.circuit->nb_qubits() > nbQubits)
            throw std::invalid_argument("block of " + std::to_string(b.circuit->nb_qubits()) +
                                        " qubits at offset " + std::to_string(b.offset) +
                                        " does not fit in " + std::to_string(nbQubits) + " qubits");
    }
};

Gate shifted(Gate g, int offset) {
    for (auto& t : g.targets) t += offset;
    for (auto& c : g.controls) c.qubit += offset;
    return g;
}

void flatten_into(Circuit& out, const Circuit& c, int offset) {
    for (const auto& instr : c.instructions()) {
        if (const auto* g = std::get_if<Gate>(&instr)) {
            out.push_back(shifted(*g, offset));
        } else if (const auto* m = std::get_if<Measurement>(&instr)) {
            out.push_back(Measurement{m->qubit + offset, m->basis});
        } else {
            const auto& b = std::get<Block>(instr);
            flatten_into(out, *b.circuit, offset + b.offset);
        }
    }
}

} // namespace

void validate_instruction(const Instruction& instr, int nbQubits) {
    std::visit(Validator{nbQubits}, instr);
}

Circuit flattened(const Circuit& c) {
    Circuit out(c.nb_qubits());
    flatten_into(out, c, 0);
    return out;
}

} // namespace qcsim
