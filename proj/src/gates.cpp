#include "qcsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcsim/errors.hpp"

namespace qcsim {

namespace {

Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Gate single(GateKind kind, int target, double theta = 0.0) {
    if (target < 0) throw std::invalid_argument("negative qubit index");
    if (!std::isfinite(theta)) throw std::invalid_argument("rotation angle must be finite");
    Gate g;
    g.kind = kind;
    g.theta = theta;
    g.targets = {target};
    return g;
}

} // namespace

Matrix gate_matrix(GateKind kind, double theta) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double half = theta / 2.0;
    switch (kind) {
        case GateKind::H:
            return mat2(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
        case GateKind::X:
            return mat2(0, 1, 1, 0);
        case GateKind::Y:
            return mat2(0, cplx(0, -1), cplx(0, 1), 0);
        case GateKind::Z:
            return mat2(1, 0, 0, -1);
        case GateKind::S:
            return mat2(1, 0, 0, cplx(0, 1));
        case GateKind::Sdg:
            return mat2(1, 0, 0, cplx(0, -1));
        case GateKind::T:
            return mat2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
        case GateKind::Tdg:
            return mat2(1, 0, 0, std::polar(1.0, -std::numbers::pi / 4));
        case GateKind::RX:
            return mat2(std::cos(half), cplx(0, -std::sin(half)),
                        cplx(0, -std::sin(half)), std::cos(half));
        case GateKind::RY:
            return mat2(std::cos(half), -std::sin(half), std::sin(half), std::cos(half));
        case GateKind::RZ:
            return mat2(std::polar(1.0, -half), 0, 0, std::polar(1.0, half));
        case GateKind::Custom:
            break;
    }
    throw std::invalid_argument("custom gates carry their own matrix");
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "Sdg";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "Tdg";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::Custom: return "Custom";
    }
    return "?";
}

Matrix Gate::base_matrix() const {
    if (kind == GateKind::Custom) return custom;
    return gate_matrix(kind, theta);
}

namespace gates {

Gate hadamard(int target) { return single(GateKind::H, target); }
Gate pauli_x(int target) { return single(GateKind::X, target); }
Gate pauli_y(int target) { return single(GateKind::Y, target); }
Gate pauli_z(int target) { return single(GateKind::Z, target); }
Gate s(int target) { return single(GateKind::S, target); }
Gate sdg(int target) { return single(GateKind::Sdg, target); }
Gate t(int target) { return single(GateKind::T, target); }
Gate tdg(int target) { return single(GateKind::Tdg, target); }
Gate rx(double theta, int target) { return single(GateKind::RX, target, theta); }
Gate ry(double theta, int target) { return single(GateKind::RY, target, theta); }
Gate rz(double theta, int target) { return single(GateKind::RZ, target, theta); }

Gate cnot(int control, int target) {
    Gate g = single(GateKind::X, target);
    g.controls = {{control, 1}};
    return g;
}

Gate cz(int control, int target) {
    Gate g = single(GateKind::Z, target);
    g.controls = {{control, 1}};
    return g;
}

Gate mcx(std::vector<int> controls, int target, std::vector<int> states) {
    if (controls.size() != states.size())
        throw std::invalid_argument("mcx: controls and states differ in length");
    if (controls.empty()) throw std::invalid_argument("mcx: at least one control required");
    Gate g = single(GateKind::X, target);
    g.controls.reserve(controls.size());
    for (std::size_t i = 0; i < controls.size(); ++i) {
        if (states[i] != 0 && states[i] != 1)
            throw std::invalid_argument("mcx: control state must be 0 or 1");
        g.controls.push_back({controls[i], states[i]});
    }
    return g;
}

Gate custom(Matrix u, std::vector<int> targets) {
    if (targets.empty()) throw std::invalid_argument("custom gate: no targets");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0) throw std::invalid_argument("negative qubit index");
        if (i > 0 && targets[i] != targets[i - 1] + 1)
            throw std::invalid_argument("custom gate: targets must be contiguous ascending");
    }
    const long long dim = 1LL << targets.size();
    if (u.rows() != dim || u.cols() != dim)
        throw std::invalid_argument("custom gate: matrix dimension must be 2^targets, got " +
                                    std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
    if (!is_unitary(u, kUnitaryTolerance))
        throw std::invalid_argument("custom gate: matrix is not unitary within tolerance");
    Gate g;
    g.kind = GateKind::Custom;
    g.targets = std::move(targets);
    g.custom = std::move(u);
    return g;
}

} // namespace gates

} // namespace qcsim
