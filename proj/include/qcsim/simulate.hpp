#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/statevector.hpp"

namespace qcsim {

/// One measurement trajectory: the outcome bits observed so far (one
/// character per executed measurement, in execution order), the branch
/// probability, and the full collapsed state.
struct Branch {
    std::string outcome;
    double probability = 1.0;
    StateVector state;
};

struct MeasuredQubit {
    int qubit = 0;
    Basis basis;
};

struct SimulateOptions {
    // k measurements can fan out into 2^k live branches; exceeding this
    // cap raises resource_limit_error.
    std::size_t max_branches = std::size_t(1) << 16;
};

class SimulationResult {
  public:
    enum class ReducedStatus { available, mid_circuit, all_measured, inconsistent };

    SimulationResult(std::vector<Branch> branches, std::vector<MeasuredQubit> measured,
                     ReducedStatus status, std::vector<StateVector> reduced,
                     std::string reducedError);

    // Branches sorted lexicographically by outcome.
    const std::vector<Branch>& branches() const { return branches_; }

    // Measured qubits with their bases, in execution order.
    const std::vector<MeasuredQubit>& measured_qubits() const { return measured_; }

    // Multinomial sample of `shots` outcomes, keyed by outcome string and
    // covering every branch (zero counts included). Deterministic per
    // seed: mt19937_64 with inverse-CDF sampling over the sorted branches.
    std::map<std::string, long long> counts(long long shots, std::uint64_t seed) const;

    bool has_reduced_states() const { return reduced_status_ == ReducedStatus::available; }

    // Per-branch state of the unmeasured qubits. Requires end-of-circuit
    // measurements: every measured qubit measured exactly once and left
    // untouched afterwards, with at least one qubit unmeasured.
    const std::vector<StateVector>& reduced_states() const;

  private:
    std::vector<Branch> branches_;
    std::vector<MeasuredQubit> measured_;
    ReducedStatus reduced_status_;
    std::vector<StateVector> reduced_;
    std::string reduced_error_;
};

SimulationResult simulate(const Circuit& c, std::string_view initialBits,
                          const SimulateOptions& opts = {});
SimulationResult simulate(const Circuit& c, StateVector initial,
                          const SimulateOptions& opts = {});
SimulationResult simulate(const Circuit& c, std::vector<cplx> initialAmps,
                          const SimulateOptions& opts = {});

} // namespace qcsim
