#include "qcsim/simulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qcsim/errors.hpp"

namespace qcsim {

namespace {

struct Executor {
    const SimulateOptions& opts;
    std::vector<Branch> branches;
    std::vector<MeasuredQubit> measured;
    std::vector<int> measureCount;
    bool touchedAfterMeasure = false;

    Executor(const SimulateOptions& opts, Branch initial, int nbQubits)
        : opts(opts), measureCount(nbQubits, 0) {
        branches.push_back(std::move(initial));
    }

    void run(const Circuit& c, int offset) {
        for (const auto& instr : c.instructions()) {
            if (const auto* g = std::get_if<Gate>(&instr)) {
                apply(*g, offset);
            } else if (const auto* m = std::get_if<Measurement>(&instr)) {
                split(*m, offset);
            } else {
                const auto& b = std::get<Block>(instr);
                run(*b.circuit, offset + b.offset);
            }
        }
    }

    void apply(const Gate& g, int offset) {
        for (int t : g.targets)
            if (measureCount[t + offset] > 0) touchedAfterMeasure = true;
        for (const auto& c : g.controls)
            if (measureCount[c.qubit + offset] > 0) touchedAfterMeasure = true;
        for (auto& br : branches) apply_gate_inplace(br.state, g, offset);
    }

    void split(const Measurement& m, int offset) {
        const int qubit = m.qubit + offset;
        if (measureCount[qubit]++ > 0) touchedAfterMeasure = true;
        measured.push_back({qubit, m.basis});

        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (auto& br : branches) {
            for (auto& outcome : measure(br.state, qubit, m.basis)) {
                const double p = br.probability * outcome.probability;
                if (p <= kProbPrune) continue;
                next.push_back({br.outcome + char('0' + outcome.bit), p,
                                std::move(outcome.state)});
            }
        }
        if (next.size() > opts.max_branches)
            throw resource_limit_error("simulate: " + std::to_string(next.size()) +
                                       " branches exceed cap of " +
                                       std::to_string(opts.max_branches));
        branches = std::move(next);
    }
};

SimulationResult finalize(Executor&& exec, int nbQubits) {
    std::sort(exec.branches.begin(), exec.branches.end(),
              [](const Branch& a, const Branch& b) { return a.outcome < b.outcome; });

    using Status = SimulationResult::ReducedStatus;
    Status status = Status::available;
    std::vector<StateVector> reduced;
    std::string error;

    const int distinctMeasured =
        int(std::count_if(exec.measureCount.begin(), exec.measureCount.end(),
                          [](int c) { return c > 0; }));
    if (distinctMeasured == nbQubits) {
        status = Status::all_measured;
    } else if (exec.touchedAfterMeasure) {
        status = Status::mid_circuit;
    } else {
        std::vector<int> known;
        known.reserve(exec.measured.size());
        for (const auto& m : exec.measured) known.push_back(m.qubit);
        try {
            for (const auto& br : exec.branches)
                reduced.push_back(reduced_statevector(br.state, known, br.outcome));
        } catch (const invalid_state_error& e) {
            status = Status::inconsistent;
            reduced.clear();
            error = e.what();
        }
    }

    return SimulationResult(std::move(exec.branches), std::move(exec.measured), status,
                            std::move(reduced), std::move(error));
}

} // namespace

SimulationResult::SimulationResult(std::vector<Branch> branches,
                                   std::vector<MeasuredQubit> measured, ReducedStatus status,
                                   std::vector<StateVector> reduced, std::string reducedError)
    : branches_(std::move(branches)), measured_(std::move(measured)), reduced_status_(status),
      reduced_(std::move(reduced)), reduced_error_(std::move(reducedError)) {}

const std::vector<StateVector>& SimulationResult::reduced_states() const {
    switch (reduced_status_) {
        case ReducedStatus::available:
            return reduced_;
        case ReducedStatus::all_measured:
            throw std::invalid_argument("reduced states: every qubit was measured");
        case ReducedStatus::mid_circuit:
            throw unsupported_operation(
                "reduced states: a measured qubit was reused by a later instruction");
        case ReducedStatus::inconsistent:
            throw invalid_state_error(reduced_error_);
    }
    return reduced_;
}

std::map<std::string, long long> SimulationResult::counts(long long shots,
                                                          std::uint64_t seed) const {
    if (measured_.empty())
        throw unsupported_operation("counts: circuit contains no measurements");
    if (shots < 1) throw std::invalid_argument("counts: shots must be positive");

    std::vector<double> cdf;
    cdf.reserve(branches_.size());
    double total = 0.0;
    for (const auto& br : branches_) {
        total += br.probability;
        cdf.push_back(total);
    }

    std::map<std::string, long long> out;
    for (const auto& br : branches_) out[br.outcome] = 0;

    std::mt19937_64 gen(seed);
    for (long long s = 0; s < shots; ++s) {
        // 53-bit mantissa uniform in [0,1); explicit so the stream is
        // identical across platforms.
        const double u = double(gen() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min(std::size_t(it - cdf.begin()), branches_.size() - 1);
        ++out[branches_[idx].outcome];
    }
    return out;
}

SimulationResult simulate(const Circuit& c, StateVector initial, const SimulateOptions& opts) {
    if (initial.n != c.nb_qubits())
        throw std::invalid_argument("initial state has " + std::to_string(initial.n) +
                                    " qubits, circuit has " + std::to_string(c.nb_qubits()));
    Executor exec(opts, Branch{"", 1.0, std::move(initial)}, c.nb_qubits());
    exec.run(c, 0);
    return finalize(std::move(exec), c.nb_qubits());
}

SimulationResult simulate(const Circuit& c, std::string_view initialBits,
                          const SimulateOptions& opts) {
    if (int(initialBits.size()) != c.nb_qubits())
        throw std::invalid_argument("initial bitstring length " +
                                    std::to_string(initialBits.size()) + " does not match " +
                                    std::to_string(c.nb_qubits()) + " qubits");
    return simulate(c, init_state(initialBits), opts);
}

SimulationResult simulate(const Circuit& c, std::vector<cplx> initialAmps,
                          const SimulateOptions& opts) {
    return simulate(c, init_state(std::move(initialAmps), c.nb_qubits()), opts);
}

} // namespace qcsim
