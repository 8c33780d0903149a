#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qcsim/gates.hpp"

namespace qcsim {

class Circuit;

/// Measurement basis. Measuring in basis B means: apply B, measure in Z,
/// apply B† to each collapsed state. X uses B = H, Y uses B = H·S†, so B
/// maps the basis eigenvectors onto |0>/|1>.
class Basis {
  public:
    enum class Kind { Z, X, Y, Custom };

    Basis() : kind_(Kind::Z) {}

    static Basis z() { return Basis(Kind::Z); }
    static Basis x() { return Basis(Kind::X); }
    static Basis y() { return Basis(Kind::Y); }
    static Basis custom(Matrix b);

    Kind kind() const { return kind_; }
    bool is_z() const { return kind_ == Kind::Z; }

    // The 2x2 basis-change unitary B (identity for Z).
    Matrix change_matrix() const;

    char letter() const;

    friend bool operator==(const Basis&, const Basis&) = default;

  private:
    explicit Basis(Kind kind) : kind_(kind) {}

    Kind kind_;
    Matrix custom_;
};

struct Measurement {
    int qubit = 0;
    Basis basis = Basis::z();

    friend bool operator==(const Measurement&, const Measurement&) = default;
};

// A nested circuit placed so that its qubit k acts on parent qubit
// k + offset. Holds an immutable snapshot of the subcircuit.
struct Block {
    std::shared_ptr<const Circuit> circuit;
    int offset = 0;

    friend bool operator==(const Block& a, const Block& b);
};

using Instruction = std::variant<Gate, Measurement, Block>;

/// Ordered instruction container. push_back validates eagerly; once
/// construction is done a Circuit is treated as an immutable value.
class Circuit {
  public:
    explicit Circuit(int nbQubits);

    int nb_qubits() const { return nb_qubits_; }
    const std::vector<Instruction>& instructions() const { return instructions_; }

    void push_back(Instruction instr);

    // Appends `sub` as a Block at the given offset (snapshot copy).
    void push_back(const Circuit& sub, int offset = 0);

    // Rendering-only flag: draw/toTex show the circuit as one labeled box
    // wherever it is nested. Never affects simulation.
    void as_block(std::string label);
    void un_block();

    bool draw_as_block() const { return draw_as_block_; }
    const std::string& label() const { return label_; }

    friend bool operator==(const Circuit&, const Circuit&) = default;

  private:
    int nb_qubits_;
    std::vector<Instruction> instructions_;
    bool draw_as_block_ = false;
    std::string label_;
};

// Throws std::invalid_argument unless `instr` is valid for a circuit of
// `nbQubits` qubits: indices in range, controls pairwise distinct and
// disjoint from targets, blocks fitting at their offset.
void validate_instruction(const Instruction& instr, int nbQubits);

// Copy with every Block expanded in place, offsets applied recursively.
Circuit flattened(const Circuit& c);

} // namespace qcsim
