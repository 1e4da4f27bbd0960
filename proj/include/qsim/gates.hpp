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
 * Unitary gate matrices and their application to a StateVector.
 *
 * A k-qubit gate acting on qubits (q_0, ..., q_{k-1}) uses the local basis
 * in which q_0 is the most significant bit, matching the register order.
 */
#pragma once

#include <span>

#include <Eigen/Dense>

#include "qsim/state_vector.hpp"

namespace qsim {

using GateMatrix = Eigen::MatrixXcd;

inline constexpr double kUnitaryTolerance = 1e-10;

[[nodiscard]] GateMatrix pauli_x();
[[nodiscard]] GateMatrix hadamard();
[[nodiscard]] GateMatrix cnot();
/// General single-qubit rotation U3(theta, phi, lambda).
[[nodiscard]] GateMatrix u3(double theta, double phi, double lambda);

[[nodiscard]] bool is_unitary(const GateMatrix &m,
                              double tol = kUnitaryTolerance);

/**
 * Applies a one- or two-qubit unitary to `state` and returns the result.
 * Throws ValidationError for non-unitary matrices and ArgumentError for
 * duplicate qubits or a size mismatch.
 */
[[nodiscard]] StateVector apply_local_unitary(const StateVector &state,
                                              std::span<const int> qubits,
                                              const GateMatrix &matrix);

[[nodiscard]] inline StateVector
apply_local_unitary(const StateVector &state, std::initializer_list<int> qubits,
                    const GateMatrix &matrix) {
    return apply_local_unitary(
        state, std::span<const int>(qubits.begin(), qubits.size()), matrix);
}

} // namespace qsim
