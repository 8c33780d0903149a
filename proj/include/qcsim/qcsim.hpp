#pragma once

#include "qcsim/algorithms.hpp"
#include "qcsim/circuit.hpp"
#include "qcsim/density.hpp"
#include "qcsim/draw.hpp"
#include "qcsim/errors.hpp"
#include "qcsim/gates.hpp"
#include "qcsim/json_io.hpp"
#include "qcsim/kernels.hpp"
#include "qcsim/matrix.hpp"
#include "qcsim/qasm.hpp"
#include "qcsim/simulate.hpp"
#include "qcsim/statevector.hpp"
#include "qcsim/tex.hpp"
#include "qcsim/unitary.hpp"
