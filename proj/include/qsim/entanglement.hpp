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
 * mu-resolvable entanglement: the sum of single-particle marginal entropies
 * (bits, at mu-bit precision), counted only when every bipartition's second
 * Schmidt eigenvalue is resolvable, i.e. at least 2^{-mu/2}.
 */
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qsim/density.hpp"
#include "qsim/state_vector.hpp"

namespace qsim::cmqm {

/// Largest particle count accepted by the entanglement monotone.
inline constexpr int kMaxParticles = 12;

using ParticleSet = std::uint32_t; ///< bit i set = particle i included

struct EntanglementReport {
    int mu = 0;
    double xi = 0.0;
    std::vector<double> marginal_entropies;
    /// One entry per complementary pair, keyed by the member holding
    /// particle 0. Values are clamped to [0, 1/2].
    std::map<ParticleSet, double> bipartition_lambdas;
    bool resolvable = false;

    /// (lambda_+)_y for any non-empty proper subset y.
    [[nodiscard]] double lambda_for(ParticleSet subset) const;
};

/// Second-largest eigenvalue of the reduced operator on `particles`.
[[nodiscard]] double second_schmidt_eigenvalue(const StateVector &state,
                                               const Grouping &grouping,
                                               std::span<const int> particles);

/// -sum lambda log2 lambda over mu-precision eigenvalues.
[[nodiscard]] double mu_precision_entropy(std::span<const double> eigenvalues,
                                          int mu);

/// Requires a normalized state and 2 <= particles <= 12.
[[nodiscard]] EntanglementReport
mu_resolvable_entanglement(const StateVector &state, const Grouping &grouping,
                           int mu);

} // namespace qsim::cmqm
