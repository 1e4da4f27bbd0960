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
 * Reduced density operators of a pure state under a grouping of qubits
 * into particles.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qsim/state_vector.hpp"

namespace qsim {

/// Partition of the register's qubits into particles; particle i owns
/// grouping[i] (qubit order inside a particle is significant).
using Grouping = std::vector<std::vector<int>>;

using DensityMatrix = Eigen::MatrixXcd;

/// One particle per qubit.
[[nodiscard]] Grouping qubit_grouping(int num_qubits);

/// Throws ArgumentError unless `grouping` partitions [0, num_qubits).
void validate_grouping(const Grouping &grouping, int num_qubits);

/// Qubits of the listed particles, in particle order.
[[nodiscard]] std::vector<int> qubits_of(const Grouping &grouping,
                                         std::span<const int> particles);

/**
 * tr_{rest}(|psi><psi|) keeping `keep`. The state must be normalized and
 * `keep` a non-empty proper subset of the particles.
 */
[[nodiscard]] DensityMatrix reduced_density(const StateVector &state,
                                            std::span<const int> keep,
                                            const Grouping &grouping);

/**
 * Coefficient matrix C with psi = sum C[a][b] |a>_kept |b>_rest for the
 * listed qubits; any qubit subset is accepted, including empty or all.
 */
[[nodiscard]] Eigen::MatrixXcd
bipartite_coefficients(const StateVector &state, std::span<const int> kept);

/// Eigenvalues of the reduced operator on `kept`, descending. Computed from
/// whichever side of the cut is smaller; trailing zeros are included so the
/// length is always 2^|kept|.
[[nodiscard]] std::vector<double> schmidt_spectrum(const StateVector &state,
                                                   std::span<const int> kept);

/// Eigenvalues of a Hermitian matrix, descending.
[[nodiscard]] std::vector<double> hermitian_eigenvalues(const DensityMatrix &m);

} // namespace qsim
