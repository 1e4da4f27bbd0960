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
#include "qsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qsim/error.hpp"
#include "qsim/measurement.hpp"
#include "qsim/quantize.hpp"

namespace qsim::cmqm {

namespace {

constexpr double kProductFidelity = 1.0 - 1e-9;

/// Particle owning each qubit.
std::vector<int> owners(const Grouping &grouping, int num_qubits) {
    std::vector<int> owner(static_cast<std::size_t>(num_qubits), -1);
    for (std::size_t p = 0; p < grouping.size(); ++p) {
        for (int q : grouping[p]) {
            owner[static_cast<std::size_t>(q)] = static_cast<int>(p);
        }
    }
    return owner;
}

} // namespace

void CmqmConfig::validate() const {
    validate_mu(mu);
    if (std::isnan(theta) || theta <= 0.0) {
        throw ArgumentError("collapse threshold factor must be positive");
    }
}

bool should_collapse(const EntanglementReport &report,
                     const CmqmConfig &config) {
    return report.xi >= config.theta * static_cast<double>(config.mu);
}

StateVector collapse(const StateVector &state, Rng &rng) {
    if (state.squared_norm() == 0.0) {
        throw DegenerateStateError("cannot collapse the zero state");
    }
    state.require_normalized("collapse");
    return sample_outcome(state, MeasurementRule::born(), rng).post_state;
}

EntanglementReport cluster_entanglement(const StateVector &state,
                                        const Grouping &grouping,
                                        std::span<const int> cluster, int mu) {
    std::vector<int> sorted(cluster.begin(), cluster.end());
    std::ranges::sort(sorted);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() == grouping.size()) {
        return mu_resolvable_entanglement(state, grouping, mu);
    }

    const auto qubits = qubits_of(grouping, sorted);
    const Eigen::MatrixXcd coeff = bipartite_coefficients(state, qubits);
    Eigen::Index best = 0;
    coeff.colwise().squaredNorm().maxCoeff(&best);
    const Eigen::VectorXcd phi = coeff.col(best).normalized();
    // |<phi (x) chi | psi>|^2 with chi the best partner state of phi.
    const double fidelity = (coeff.adjoint() * phi).squaredNorm();
    if (fidelity < kProductFidelity) {
        return mu_resolvable_entanglement(state, grouping, mu);
    }

    std::vector<Complex> amps(phi.data(), phi.data() + phi.size());
    const StateVector local(std::move(amps));
    Grouping local_grouping;
    int offset = 0;
    for (int p : sorted) {
        std::vector<int> owned;
        for (std::size_t k = 0;
             k < grouping[static_cast<std::size_t>(p)].size(); ++k) {
            owned.push_back(offset++);
        }
        local_grouping.push_back(std::move(owned));
    }
    return mu_resolvable_entanglement(local, local_grouping, mu);
}

TrajectoryRecord evolve(const StateVector &initial,
                        std::span<const CircuitGate> circuit,
                        const Grouping &grouping, const CmqmConfig &config,
                        Rng &rng) {
    config.validate();
    validate_grouping(grouping, initial.num_qubits());
    const auto owner = owners(grouping, initial.num_qubits());

    TrajectoryRecord record;
    StateVector state = initial;
    std::vector<bool> in_cluster(grouping.size(), false);
    int step = 0;
    for (const auto &gate : circuit) {
        ++step;
        state = apply_local_unitary(state, gate.qubits, gate.matrix);
        for (int q : gate.qubits) {
            in_cluster[static_cast<std::size_t>(
                owner[static_cast<std::size_t>(q)])] = true;
        }

        QuantizedState grid = quantize(state, config.mu);
        if (grid.state.squared_norm() == 0.0) {
            record.steps.push_back(
                {step, gate.name, 0.0, grid.norm_loss, true, false, 0});
            record.status = "instability";
            record.message = "step " + std::to_string(step) +
                             " lost the entire norm to quantization";
            break;
        }
        // Significant loss is carried forward as a norm deficit.
        state = grid.significant_loss ? std::move(grid.state)
                                      : grid.state.normalized();

        std::vector<int> cluster;
        for (std::size_t p = 0; p < in_cluster.size(); ++p) {
            if (in_cluster[p]) {
                cluster.push_back(static_cast<int>(p));
            }
        }
        double xi = 0.0;
        bool collapsed = false;
        if (cluster.size() >= 2) {
            const StateVector unit = state.normalized();
            const auto report =
                cluster_entanglement(unit, grouping, cluster, config.mu);
            xi = report.xi;
            if (should_collapse(report, config)) {
                state = collapse(unit, rng);
                std::fill(in_cluster.begin(), in_cluster.end(), false);
                record.collapse_events.push_back(step);
                collapsed = true;
            }
        }
        record.steps.push_back({step, gate.name, xi, grid.norm_loss,
                                grid.significant_loss, collapsed,
                                static_cast<int>(cluster.size())});
    }
    record.final_state = std::move(state);
    return record;
}

std::vector<CircuitGate> ghz_staircase(int num_qubits) {
    if (num_qubits < 1) {
        throw ArgumentError("GHZ staircase needs at least one qubit");
    }
    std::vector<CircuitGate> circuit;
    circuit.push_back({"H", {0}, hadamard()});
    for (int k = 1; k < num_qubits; ++k) {
        circuit.push_back({"CNOT", {k - 1, k}, cnot()});
    }
    return circuit;
}

std::vector<CircuitGate> random_circuit(int num_qubits, int depth, Rng &rng) {
    if (num_qubits < 2 || depth < 1) {
        throw ArgumentError("random circuit needs >= 2 qubits and depth >= 1");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<CircuitGate> circuit;
    std::vector<int> perm(static_cast<std::size_t>(num_qubits));
    for (int layer = 0; layer < depth; ++layer) {
        for (int q = 0; q < num_qubits; ++q) {
            const double theta = std::acos(1.0 - 2.0 * rng.uniform());
            const double phi = two_pi * rng.uniform();
            const double lambda = two_pi * rng.uniform();
            circuit.push_back({"U3", {q}, u3(theta, phi, lambda)});
        }
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size() - 1; i > 0; --i) {
            std::swap(perm[i], perm[rng.below(i + 1)]);
        }
        for (std::size_t i = 0; i + 1 < perm.size(); i += 2) {
            circuit.push_back({"CNOT", {perm[i], perm[i + 1]}, cnot()});
        }
    }
    return circuit;
}

} // namespace qsim::cmqm
