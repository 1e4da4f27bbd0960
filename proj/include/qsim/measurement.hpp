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
 * Computational-basis readout under the generalized p-norm rule
 * P(x) = |a_x|^p / sum_y |a_y|^p, with p = 2 the Born rule.
 *
 * Normalization happens here and only here, so unnormalized inputs (for
 * example after a non-unitary gate) are accepted.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsim/random.hpp"
#include "qsim/state_vector.hpp"

namespace qsim {

class MeasurementRule {
  public:
    /// Throws ArgumentError unless p is finite and positive.
    explicit MeasurementRule(double p = 2.0);

    [[nodiscard]] static MeasurementRule born() { return MeasurementRule(2.0); }
    [[nodiscard]] double p() const noexcept { return p_; }
    /// |a|^p
    [[nodiscard]] double weight(Complex amplitude) const;

  private:
    double p_;
};

[[nodiscard]] std::vector<double>
outcome_distribution(const StateVector &state, const MeasurementRule &rule);

/// Distribution over the values of `qubits` (first listed = most significant).
[[nodiscard]] std::vector<double>
marginal_distribution(const StateVector &state, const MeasurementRule &rule,
                      std::span<const int> qubits);

struct MeasurementOutcome {
    /// Full basis index, or the subset value when qubits were specified.
    std::uint64_t outcome;
    StateVector post_state;
};

/// Full projective readout.
[[nodiscard]] MeasurementOutcome
sample_outcome(const StateVector &state, const MeasurementRule &rule, Rng &rng);

/// Readout of `qubits` only; the post-state is the renormalized projection.
[[nodiscard]] MeasurementOutcome sample_outcome(const StateVector &state,
                                                const MeasurementRule &rule,
                                                std::span<const int> qubits,
                                                Rng &rng);

/// Index drawn from a discrete distribution using one uniform variate.
[[nodiscard]] std::size_t sample_index(std::span<const double> distribution,
                                       Rng &rng);

} // namespace qsim
