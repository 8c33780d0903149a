#pragma once

#include <string>

#include "qcsim/circuit.hpp"

namespace qcsim {

// Musical-score diagram: one three-line band per qubit, one column per
// instruction. Boxed gate letters, ● / ○ polarized controls, ⊕ targets of
// controlled X, ┃ vertical connectors, ━ wires. Circuits flagged with
// as_block render as a single labeled multi-row box. Pure and
// deterministic; every output row has the same display width.
std::string draw_ascii(const Circuit& c);

} // namespace qcsim
