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
#include "qsim/variant.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qsim/error.hpp"
#include "qsim/gates.hpp"
#include "qsim/measurement.hpp"

namespace qsim::variant {

namespace {

void check_scale(int scale_n) {
    if (scale_n < 1) {
        throw ArgumentError("gate scale must be at least 1, got " +
                            std::to_string(scale_n));
    }
}

StateVector scale_flag_value(const StateVector &state, int flag, bool value,
                             double factor) {
    const std::size_t m = state.mask(flag);
    StateVector out(state);
    auto amps = out.amplitudes_mut();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (((i & m) != 0) == value) {
            amps[i] *= factor;
        }
    }
    return out;
}

/// Phase (unit complex) of the largest-magnitude entry; first wins ties.
Complex dominant_phase(std::span<const Complex> values) {
    std::size_t best = 0;
    double best_mag2 = -1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double mag2 = std::norm(values[i]);
        if (mag2 > best_mag2) {
            best_mag2 = mag2;
            best = i;
        }
    }
    return values[best] / std::abs(values[best]);
}

} // namespace

std::string_view to_string(NonlinearMode mode) noexcept {
    return mode == NonlinearMode::Or ? "OR" : "AND";
}

StateVector nonlinear_gate(const StateVector &state, int control, int flag,
                           NonlinearMode mode) {
    if (control == flag) {
        throw ArgumentError("control and flag must differ");
    }
    const std::size_t mc = state.mask(control);
    const std::size_t mf = state.mask(flag);
    state.require_normalized("nonlinear_gate");

    StateVector out(state);
    auto amps = out.amplitudes_mut();
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if ((base & (mc | mf)) != 0) {
            continue;
        }
        // Block order: (control, flag) = 00, 01, 10, 11.
        const std::array<std::size_t, 4> idx{base, base | mf, base | mc,
                                             base | mc | mf};
        std::array<Complex, 4> block{};
        double norm2 = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            block[k] = amps[idx[k]];
            norm2 += std::norm(block[k]);
        }
        const double norm = std::sqrt(norm2);
        if (norm <= kSupportThreshold) {
            continue;
        }
        bool has_zero = false;
        bool has_one = false;
        for (std::size_t k = 0; k < 4; ++k) {
            if (std::norm(block[k]) >
                kBranchThreshold * kBranchThreshold * norm2) {
                ((k & 1U) != 0 ? has_one : has_zero) = true;
            }
        }
        const bool result = mode == NonlinearMode::Or ? has_one : !has_zero;
        const Complex value =
            dominant_phase(block) * (norm / std::numbers::sqrt2);
        for (std::size_t k = 0; k < 4; ++k) {
            amps[idx[k]] = 0.0;
        }
        const std::size_t fbit = result ? mf : 0;
        amps[base | fbit] = value;
        amps[base | mc | fbit] = value;
    }
    return out;
}

StateVector nonlinear_count(const StateVector &state, int control,
                            std::span<const int> counter) {
    const std::size_t mc = state.mask(control);
    if (counter.empty()) {
        throw ArgumentError("counter register is empty");
    }
    std::vector<std::size_t> cmasks;
    std::size_t counter_mask = 0;
    for (int q : counter) {
        const std::size_t m = state.mask(q);
        if (m == mc) {
            throw ArgumentError("control qubit is part of the counter");
        }
        if ((counter_mask & m) != 0) {
            throw ArgumentError("duplicate counter qubit " + std::to_string(q));
        }
        counter_mask |= m;
        cmasks.push_back(m);
    }
    const std::size_t width = cmasks.size();
    const std::uint64_t num_values = std::uint64_t{1} << width;

    // Scatter table: counter value -> index bits.
    std::vector<std::size_t> offset(num_values, 0);
    for (std::uint64_t v = 0; v < num_values; ++v) {
        for (std::size_t b = 0; b < width; ++b) {
            if (((v >> (width - 1 - b)) & 1U) != 0) {
                offset[v] |= cmasks[b];
            }
        }
    }

    StateVector out(state);
    auto amps = out.amplitudes_mut();
    std::vector<Complex> branch(num_values);
    const std::size_t fixed = mc | counter_mask;
    // Visit only indices with every fixed bit clear.
    for (std::size_t base = 0; base < amps.size();
         base = ((base | fixed) + 1) & ~fixed) {
        std::array<std::uint64_t, 2> reading{0, 0};
        double block_norm2 = 0.0;
        Complex dominant = 0.0;
        double dominant_mag2 = -1.0;
        for (std::size_t c = 0; c < 2; ++c) {
            const std::size_t cbase = base | (c != 0 ? mc : 0);
            double norm2 = 0.0;
            for (std::uint64_t v = 0; v < num_values; ++v) {
                branch[v] = amps[cbase | offset[v]];
                const double mag2 = std::norm(branch[v]);
                norm2 += mag2;
                if (mag2 > dominant_mag2) {
                    dominant_mag2 = mag2;
                    dominant = branch[v];
                }
            }
            block_norm2 += norm2;
            const double norm = std::sqrt(norm2);
            if (norm <= kSupportThreshold) {
                continue;
            }
            int resolvable = 0;
            for (std::uint64_t v = 0; v < num_values; ++v) {
                if (std::norm(branch[v]) >
                    kBranchThreshold * kBranchThreshold * norm2) {
                    reading[c] = v;
                    ++resolvable;
                }
            }
            if (resolvable != 1) {
                throw InstabilityError("counter branch holds " +
                                       std::to_string(resolvable) +
                                       " resolvable values");
            }
        }
        const double block_norm = std::sqrt(block_norm2);
        if (block_norm <= kSupportThreshold) {
            continue;
        }
        const std::uint64_t sum = reading[0] + reading[1];
        if (sum >= num_values) {
            throw OverflowError("count " + std::to_string(sum) +
                                " overflows a " + std::to_string(width) +
                                "-qubit counter");
        }
        const Complex value =
            dominant / std::abs(dominant) * (block_norm / std::numbers::sqrt2);
        for (std::size_t c = 0; c < 2; ++c) {
            const std::size_t cbase = base | (c != 0 ? mc : 0);
            for (std::uint64_t v = 0; v < num_values; ++v) {
                amps[cbase | offset[v]] = 0.0;
            }
            amps[cbase | offset[sum]] = value;
        }
    }
    return out;
}

StateVector apply_g(const StateVector &state, int flag, int scale_n) {
    check_scale(scale_n);
    return scale_flag_value(state, flag, false, std::ldexp(1.0, -2 * scale_n));
}

StateVector apply_g_inverse(const StateVector &state, int flag, int scale_n) {
    check_scale(scale_n);
    return scale_flag_value(state, flag, false, std::ldexp(1.0, 2 * scale_n));
}

StateVector apply_xgx(const StateVector &state, int flag, int scale_n) {
    const GateMatrix x = pauli_x();
    const std::array<int, 1> target{flag};
    return apply_local_unitary(
        apply_g(apply_local_unitary(state, target, x), flag, scale_n), target,
        x);
}

double signaling_closed_form(int scale_n) {
    check_scale(scale_n);
    return 1.0 / (1.0 + std::ldexp(1.0, -4 * scale_n));
}

SignalingResult signaling_experiment(int scale_n) {
    check_scale(scale_n);
    constexpr int alice = 0;
    const std::array<int, 1> bob{1};
    const double r = 1.0 / std::numbers::sqrt2;
    const StateVector shared(std::vector<Complex>{0.0, r, r, 0.0});
    const MeasurementRule born = MeasurementRule::born();

    const auto after_g =
        marginal_distribution(apply_g(shared, alice, scale_n), born, bob);
    const auto after_xgx =
        marginal_distribution(apply_xgx(shared, alice, scale_n), born, bob);
    return {scale_n, after_g[0], after_xgx[1]};
}

} // namespace qsim::variant
