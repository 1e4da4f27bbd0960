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
#include "qsim/measurement.hpp"

#include <cmath>
#include <string>

#include "qsim/error.hpp"

namespace qsim {

namespace {

double total_weight(const std::vector<double> &weights) {
    double total = 0.0;
    for (double w : weights) {
        total += w;
    }
    return total;
}

std::vector<double> weights_of(const StateVector &state,
                               const MeasurementRule &rule) {
    const auto amps = state.amplitudes();
    std::vector<double> weights(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        weights[i] = rule.weight(amps[i]);
    }
    return weights;
}

std::vector<std::size_t> masks_of(const StateVector &state,
                                  std::span<const int> qubits) {
    std::vector<std::size_t> masks;
    masks.reserve(qubits.size());
    for (int q : qubits) {
        const std::size_t m = state.mask(q);
        for (std::size_t existing : masks) {
            if (existing == m) {
                throw ArgumentError("duplicate qubit position " +
                                    std::to_string(q));
            }
        }
        masks.push_back(m);
    }
    return masks;
}

std::uint64_t subset_value(std::size_t index,
                           const std::vector<std::size_t> &masks) {
    std::uint64_t value = 0;
    for (std::size_t m : masks) {
        value = (value << 1) | ((index & m) != 0 ? 1U : 0U);
    }
    return value;
}

} // namespace

MeasurementRule::MeasurementRule(double p) : p_(p) {
    if (!std::isfinite(p) || p <= 0.0) {
        throw ArgumentError("measurement exponent must be finite and "
                            "positive, got " +
                            std::to_string(p));
    }
}

double MeasurementRule::weight(Complex amplitude) const {
    if (p_ == 2.0) {
        return std::norm(amplitude);
    }
    return std::pow(std::abs(amplitude), p_);
}

std::vector<double> outcome_distribution(const StateVector &state,
                                         const MeasurementRule &rule) {
    auto weights = weights_of(state, rule);
    const double total = total_weight(weights);
    if (!(total > 0.0)) {
        throw DegenerateStateError("outcome distribution of the zero state");
    }
    for (double &w : weights) {
        w /= total;
    }
    return weights;
}

std::vector<double> marginal_distribution(const StateVector &state,
                                          const MeasurementRule &rule,
                                          std::span<const int> qubits) {
    const auto masks = masks_of(state, qubits);
    const auto full = outcome_distribution(state, rule);
    std::vector<double> marginal(std::size_t{1} << masks.size(), 0.0);
    for (std::size_t i = 0; i < full.size(); ++i) {
        marginal[subset_value(i, masks)] += full[i];
    }
    return marginal;
}

std::size_t sample_index(std::span<const double> distribution, Rng &rng) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < distribution.size(); ++i) {
        if (distribution[i] <= 0.0) {
            continue;
        }
        cumulative += distribution[i];
        last_positive = i;
        if (u < cumulative) {
            return i;
        }
    }
    // u landed in the rounding slack above the final cumulative sum.
    return last_positive;
}

MeasurementOutcome sample_outcome(const StateVector &state,
                                  const MeasurementRule &rule, Rng &rng) {
    const auto dist = outcome_distribution(state, rule);
    const std::size_t index = sample_index(dist, rng);
    return {index, new_basis_state(state.num_qubits(), index)};
}

MeasurementOutcome sample_outcome(const StateVector &state,
                                  const MeasurementRule &rule,
                                  std::span<const int> qubits, Rng &rng) {
    const auto masks = masks_of(state, qubits);
    const auto marginal = marginal_distribution(state, rule, qubits);
    const std::uint64_t value = sample_index(marginal, rng);

    StateVector post(state.num_qubits());
    auto out = post.amplitudes_mut();
    const auto in = state.amplitudes();
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (subset_value(i, masks) == value) {
            out[i] = in[i];
        }
    }
    return {value, post.normalized()};
}

} // namespace qsim
