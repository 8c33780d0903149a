#pragma once

#include <string>
#include <string_view>

#include "qcsim/circuit.hpp"

namespace qcsim {

// compact emits `measure q[i];` with no classical register; strict_qasm2
// adds the OPENQASM header, qelib include and a creg so the output is
// valid OpenQASM 2.
enum class QasmDialect { compact, strict_qasm2 };

// OpenQASM text for the exportable subset (h x y z s sdg t tdg rx ry rz,
// cx, cz, ccx, Z-basis measurements). Blocks are inlined with their
// offsets applied. Throws unsupported_export_error naming the offending
// top-level instruction otherwise.
std::string to_qasm(const Circuit& c, QasmDialect dialect = QasmDialect::compact);

// Parses the emitted subset grammar back into a circuit. `OPENQASM`,
// `include` and `creg` lines are accepted and ignored; gate arguments may
// be decimal radians or simple pi expressions (pi, pi/2, -pi/4, 2*pi).
// Throws parse_error with 1-based line/column on malformed input.
Circuit parse_qasm(std::string_view text);

} // namespace qcsim
