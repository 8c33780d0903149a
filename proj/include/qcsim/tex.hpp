#pragma once

#include <string>

#include "qcsim/circuit.hpp"

namespace qcsim {

// qcircuit-package rows, one `&`-separated column per instruction,
// `\qw` fillers, rows terminated with `\\`. Controls emit \ctrl / \ctrlo
// with relative row offsets chained toward the target; block-flagged
// subcircuits emit \multigate / \ghost.
std::string to_tex(const Circuit& c);

// Same rows wrapped in a compilable standalone document.
std::string to_tex_standalone(const Circuit& c);

} // namespace qcsim
