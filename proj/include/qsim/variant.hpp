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
 * Non-standard primitives: state-dependent nonlinear OR/AND gates, the
 * nonlinear counting gate, the non-unitary diagonal gate G, and the EPR
 * signaling protocol built on G.
 */
#pragma once

#include <span>
#include <string_view>

#include "qsim/state_vector.hpp"

namespace qsim::variant {

enum class NonlinearMode { Or, And };

[[nodiscard]] std::string_view to_string(NonlinearMode mode) noexcept;

/// Relative magnitude (to the block norm) above which a basis state counts
/// as a resolvable branch of a block.
inline constexpr double kBranchThreshold = 1e-9;

/**
 * Writes the OR (or AND) of the flag values present in each (control, flag)
 * block onto both control branches of that block.
 *
 * For every assignment of the remaining qubits the four amplitudes over
 * (control, flag) are replaced by norm/sqrt(2) on (0, b) and (1, b), where b
 * is the OR/AND of the resolvable flag values and the phase is that of the
 * largest input amplitude. Blocks of norm <= 1e-12 are left untouched.
 */
[[nodiscard]] StateVector nonlinear_gate(const StateVector &state, int control,
                                         int flag, NonlinearMode mode);

/**
 * Nonlinear counting: per block, the counter values carried by the two
 * control branches are summed and written onto both branches. `counter`
 * lists the counter qubits, most significant first.
 *
 * Throws InstabilityError when a branch holds two resolvable counter values
 * and OverflowError when the sum does not fit.
 */
[[nodiscard]] StateVector nonlinear_count(const StateVector &state, int control,
                                          std::span<const int> counter);

/// diag(2^{-2 scale_n}, 1) on `flag`. The result is deliberately unnormalized.
[[nodiscard]] StateVector apply_g(const StateVector &state, int flag,
                                  int scale_n);

/// diag(2^{+2 scale_n}, 1) on `flag`, undoing apply_g.
[[nodiscard]] StateVector apply_g_inverse(const StateVector &state, int flag,
                                          int scale_n);

/// X G X on `flag`: suppresses the flag-1 amplitudes instead.
[[nodiscard]] StateVector apply_xgx(const StateVector &state, int flag,
                                    int scale_n);

struct SignalingResult {
    int scale_n;
    double p_bob_zero_given_G;
    double p_bob_one_given_XGX;
};

/**
 * Alice (qubit 0) applies G or XGX to her half of (|01> + |10>)/sqrt(2);
 * reports Bob's (qubit 1) Born-rule marginal in each case.
 */
[[nodiscard]] SignalingResult signaling_experiment(int scale_n);

/// 1 / (1 + 2^{-4 scale_n})
[[nodiscard]] double signaling_closed_form(int scale_n);

} // namespace qsim::variant
