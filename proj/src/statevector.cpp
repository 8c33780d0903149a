#include "qcsim/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qcsim/errors.hpp"
#include "qcsim/kernels.hpp"

namespace qcsim {

namespace {

void check_qubit_count(int n) {
    if (n < 1) throw std::invalid_argument("state needs at least one qubit");
    if (n > kMaxSimQubits)
        throw resource_limit_error("state of " + std::to_string(n) + " qubits exceeds cap of " +
                                   std::to_string(kMaxSimQubits));
}

// Control masks in bit-position space (qubit q ↦ bit n-1-q).
std::pair<std::uint64_t, std::uint64_t> control_masks(const Gate& g, int n, int offset) {
    std::uint64_t cmask = 0, cval = 0;
    for (const auto& c : g.controls) {
        const int bit = n - 1 - (c.qubit + offset);
        cmask |= std::uint64_t(1) << bit;
        if (c.state) cval |= std::uint64_t(1) << bit;
    }
    return {cmask, cval};
}

void apply_2x2(StateVector& state, const Matrix& m, int qubit) {
    const cplx flat[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    kernels::apply_1q(state.amps.data(), state.dim(), state.n - 1 - qubit, flat, 0, 0);
}

} // namespace

double StateVector::norm() const {
    return std::sqrt(kernels::norm_sq(amps.data(), dim()));
}

StateVector init_state(std::string_view bits) {
    const int n = int(bits.size());
    check_qubit_count(n);
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("initial bitstring may only contain '0' and '1'");
        index = (index << 1) | std::uint64_t(c - '0');
    }
    StateVector s;
    s.n = n;
    s.amps.assign(std::uint64_t(1) << n, cplx{});
    s.amps[index] = 1.0;
    return s;
}

StateVector init_state(std::vector<cplx> amps, int n) {
    check_qubit_count(n);
    if (amps.size() != (std::uint64_t(1) << n))
        throw std::invalid_argument("initial vector must have length 2^" + std::to_string(n));
    const double norm = std::sqrt(kernels::norm_sq(amps.data(), amps.size()));
    if (std::abs(norm - 1.0) > 1e-8)
        throw std::invalid_argument("initial vector is not normalized (norm " +
                                    std::to_string(norm) + ")");
    StateVector s;
    s.n = n;
    s.amps = std::move(amps);
    return s;
}

void apply_gate_inplace(StateVector& state, const Gate& g, int offset) {
    const int n = state.n;
    auto [cmask, cval] = control_masks(g, n, offset);
    cplx* amps = state.amps.data();
    const std::uint64_t dim = state.dim();

    switch (g.kind) {
        case GateKind::X:
            kernels::apply_x(amps, dim, n - 1 - (g.targets[0] + offset), cmask, cval);
            return;
        case GateKind::Z:
            kernels::apply_phase(amps, dim, n - 1 - (g.targets[0] + offset), -1.0, cmask, cval);
            return;
        case GateKind::S:
            kernels::apply_phase(amps, dim, n - 1 - (g.targets[0] + offset), cplx(0, 1), cmask, cval);
            return;
        case GateKind::Sdg:
            kernels::apply_phase(amps, dim, n - 1 - (g.targets[0] + offset), cplx(0, -1), cmask, cval);
            return;
        case GateKind::T:
        case GateKind::Tdg: {
            const Matrix m = g.base_matrix();
            kernels::apply_phase(amps, dim, n - 1 - (g.targets[0] + offset), m(1, 1), cmask, cval);
            return;
        }
        case GateKind::Custom: {
            const int k = int(g.targets.size());
            if (k == 1) break;
            const int low = n - (g.targets.front() + offset) - k;
            kernels::apply_window(amps, dim, low, k, g.custom, cmask, cval);
            return;
        }
        default:
            break;
    }

    const Matrix m = g.base_matrix();
    const cplx flat[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    kernels::apply_1q(amps, dim, n - 1 - (g.targets[0] + offset), flat, cmask, cval);
}

StateVector apply_gate(StateVector state, const Gate& g) {
    for (int t : g.targets)
        if (t >= state.n) throw std::invalid_argument("gate target out of range for state");
    for (const auto& c : g.controls)
        if (c.qubit >= state.n) throw std::invalid_argument("gate control out of range for state");
    apply_gate_inplace(state, g);
    return state;
}

std::vector<MeasureOutcome> measure(const StateVector& state, int qubit, const Basis& basis) {
    if (qubit < 0 || qubit >= state.n)
        throw std::invalid_argument("measured qubit " + std::to_string(qubit) + " out of range");

    StateVector rotated = state;
    if (!basis.is_z()) apply_2x2(rotated, basis.change_matrix(), qubit);

    const int bit = state.n - 1 - qubit;
    const double total = kernels::norm_sq(rotated.amps.data(), rotated.dim());
    const double p0 = kernels::prob_zero(rotated.amps.data(), rotated.dim(), bit);
    const double prob[2] = {p0, total - p0};

    std::vector<MeasureOutcome> outcomes;
    for (int b = 0; b < 2; ++b) {
        if (prob[b] <= kProbPrune) continue;
        StateVector collapsed = rotated;
        kernels::collapse(collapsed.amps.data(), collapsed.dim(), bit, b,
                          1.0 / std::sqrt(prob[b]));
        if (!basis.is_z()) apply_2x2(collapsed, basis.change_matrix().adjoint(), qubit);
        outcomes.push_back({b, prob[b], std::move(collapsed)});
    }
    return outcomes;
}

StateVector reduced_statevector(const StateVector& state, std::span<const int> knownQubits,
                                std::string_view outcome) {
    if (knownQubits.size() != outcome.size())
        throw std::invalid_argument("reduced_statevector: qubit list and outcome differ in length");
    std::set<int> known;
    std::uint64_t fixed = 0;
    for (std::size_t i = 0; i < knownQubits.size(); ++i) {
        const int q = knownQubits[i];
        if (q < 0 || q >= state.n)
            throw std::invalid_argument("reduced_statevector: qubit out of range");
        if (!known.insert(q).second)
            throw std::invalid_argument("reduced_statevector: duplicate known qubit");
        if (outcome[i] != '0' && outcome[i] != '1')
            throw std::invalid_argument("reduced_statevector: outcome must be over '0'/'1'");
        if (outcome[i] == '1') fixed |= std::uint64_t(1) << (state.n - 1 - q);
    }

    std::vector<int> complement;
    for (int q = 0; q < state.n; ++q)
        if (!known.count(q)) complement.push_back(q);
    if (complement.empty())
        throw std::invalid_argument("reduced_statevector: no unmeasured qubits remain");

    const int m = int(complement.size());
    std::vector<cplx> sub(std::uint64_t(1) << m);
    double inside = 0.0;
    for (std::uint64_t c = 0; c < sub.size(); ++c) {
        std::uint64_t index = fixed;
        for (int j = 0; j < m; ++j)
            if ((c >> (m - 1 - j)) & 1) index |= std::uint64_t(1) << (state.n - 1 - complement[j]);
        sub[c] = state.amps[index];
        inside += std::norm(sub[c]);
    }

    const double totalMass = kernels::norm_sq(state.amps.data(), state.dim());
    if (totalMass - inside > 1e-8)
        throw invalid_state_error("state holds " + std::to_string(totalMass - inside) +
                                  " amplitude mass outside the '" + std::string(outcome) +
                                  "' slice");

    const double scale = 1.0 / std::sqrt(inside);
    for (auto& a : sub) a *= scale;
    StateVector out;
    out.n = m;
    out.amps = std::move(sub);
    return out;
}

} // namespace qcsim
