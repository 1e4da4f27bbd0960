// Copyright 2026 The qsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Collapse dynamics: unitary steps on the mu grid, interrupted by a
 * Born-rule reset to a computational basis state whenever the
 * mu-resolvable entanglement of the interaction cluster reaches theta * mu.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsim/density.hpp"
#include "qsim/entanglement.hpp"
#include "qsim/gates.hpp"
#include "qsim/random.hpp"
#include "qsim/state_vector.hpp"

namespace qsim::cmqm {

struct CmqmConfig {
    int mu = 16;
    double theta = 1.0; ///< may be +infinity to disable collapse

    /// Throws ArgumentError on an invalid mu or theta <= 0.
    void validate() const;
};

[[nodiscard]] bool should_collapse(const EntanglementReport &report,
                                   const CmqmConfig &config);

/// Born-sampled computational basis state.
[[nodiscard]] StateVector collapse(const StateVector &state, Rng &rng);

struct CircuitGate {
    std::string name;
    std::vector<int> qubits;
    GateMatrix matrix;
};

struct TrajectoryStep {
    int step; ///< 1-based
    std::string gate;
    double xi;
    double norm_loss;
    bool significant_loss;
    bool collapsed;
    int cluster_size; ///< particles in the cluster when xi was evaluated
};

struct TrajectoryRecord {
    std::vector<TrajectoryStep> steps;
    std::vector<int> collapse_events;
    StateVector final_state{0};
    /// "ok", or "instability" when a step lost the whole norm.
    std::string status = "ok";
    std::string message;
};

/**
 * Runs `circuit` on `initial`. Each step applies the gate, quantizes to mu
 * bits, renormalizes when the loss is insignificant, evaluates xi over the
 * particles touched since the last collapse, and collapses when
 * should_collapse fires. A step that loses the whole norm halts the run with
 * status "instability".
 */
[[nodiscard]] TrajectoryRecord evolve(const StateVector &initial,
                                      std::span<const CircuitGate> circuit,
                                      const Grouping &grouping,
                                      const CmqmConfig &config, Rng &rng);

/// xi restricted to `cluster`; the cluster's pure state is factored out
/// when it is a product with the rest, else the whole register is used.
[[nodiscard]] EntanglementReport
cluster_entanglement(const StateVector &state, const Grouping &grouping,
                     std::span<const int> cluster, int mu);

/// H on qubit 0 followed by CNOT(k-1, k) for k = 1..n-1.
[[nodiscard]] std::vector<CircuitGate> ghz_staircase(int num_qubits);

/// `depth` layers of random U3 rotations on every qubit followed by CNOTs
/// between random distinct pairs.
[[nodiscard]] std::vector<CircuitGate> random_circuit(int num_qubits, int depth,
                                                      Rng &rng);

} // namespace qsim::cmqm
