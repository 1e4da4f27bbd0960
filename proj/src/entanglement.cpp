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
#include "qsim/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qsim/error.hpp"
#include "qsim/quantize.hpp"

namespace qsim::cmqm {

namespace {

std::vector<int> members(ParticleSet set, int num_particles) {
    std::vector<int> out;
    for (int p = 0; p < num_particles; ++p) {
        if ((set >> p) & 1U) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace

double EntanglementReport::lambda_for(ParticleSet subset) const {
    if (const auto it = bipartition_lambdas.find(subset);
        it != bipartition_lambdas.end()) {
        return it->second;
    }
    const int n = static_cast<int>(marginal_entropies.size());
    const ParticleSet all = (ParticleSet{1} << n) - 1;
    if (const auto it = bipartition_lambdas.find(all & ~subset);
        it != bipartition_lambdas.end()) {
        return it->second;
    }
    throw ArgumentError("no bipartition recorded for subset " +
                        std::to_string(subset));
}

double second_schmidt_eigenvalue(const StateVector &state,
                                 const Grouping &grouping,
                                 std::span<const int> particles) {
    const auto qubits = qubits_of(grouping, particles);
    const auto spectrum = schmidt_spectrum(state, qubits);
    if (spectrum.size() < 2) {
        return 0.0;
    }
    return std::clamp(spectrum[1], 0.0, 0.5);
}

double mu_precision_entropy(std::span<const double> eigenvalues, int mu) {
    double entropy = 0.0;
    for (double lambda : eigenvalues) {
        const double q = quantize_probability(lambda, mu);
        if (q > 0.0) {
            entropy -= q * std::log2(q);
        }
    }
    return entropy;
}

EntanglementReport mu_resolvable_entanglement(const StateVector &state,
                                              const Grouping &grouping,
                                              int mu) {
    validate_mu(mu);
    validate_grouping(grouping, state.num_qubits());
    const int n = static_cast<int>(grouping.size());
    if (n < 2 || n > kMaxParticles) {
        throw ArgumentError("entanglement monotone needs 2 to " +
                            std::to_string(kMaxParticles) + " particles, got " +
                            std::to_string(n));
    }
    state.require_normalized("mu_resolvable_entanglement");

    EntanglementReport report;
    report.mu = mu;
    report.marginal_entropies.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        const std::array<int, 1> single{p};
        const auto spectrum =
            schmidt_spectrum(state, qubits_of(grouping, single));
        report.marginal_entropies.push_back(mu_precision_entropy(spectrum, mu));
    }

    const double threshold = resolution(mu);
    const ParticleSet all = (ParticleSet{1} << n) - 1;
    bool resolvable = true;
    // Subsets holding particle 0 pick one side of every cut exactly once.
    for (ParticleSet y = 1; y < all; y += 2) {
        const double lambda =
            second_schmidt_eigenvalue(state, grouping, members(y, n));
        report.bipartition_lambdas.emplace(y, lambda);
        if (quantize_probability(lambda, mu) < threshold) {
            resolvable = false;
        }
    }
    report.resolvable = resolvable;
    if (resolvable) {
        for (double s : report.marginal_entropies) {
            report.xi += s;
        }
    }
    return report;
}

} // namespace qsim::cmqm
