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
 * Dense state-vector register.
 *
 * Qubit positions are zero-based and qubit 0 is the most significant bit of
 * the basis index, so |x>_index |f(x)>_flag is stored at index (x << w) | f.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qsim {

using Complex = std::complex<double>;

/// Largest register the dense backend will allocate.
inline constexpr int kMaxQubits = 24;
/// Amplitudes at or below this magnitude count as outside the support.
inline constexpr double kSupportThreshold = 1e-12;
/// Tolerance on |<psi|psi> - 1| for normalization checks.
inline constexpr double kNormTolerance = 1e-9;

class StateVector {
  public:
    /// All-zero register; callers fill it through amplitudes_mut().
    explicit StateVector(int num_qubits);
    explicit StateVector(std::vector<Complex> amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::span<Complex> amplitudes_mut() noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    /// Bit mask selecting `qubit` within a basis index.
    [[nodiscard]] std::size_t mask(int qubit) const;

    [[nodiscard]] double squared_norm() const noexcept;
    [[nodiscard]] bool
    is_normalized(double tol = kNormTolerance) const noexcept;
    /// Throws ValidationError naming `what` unless the state is normalized.
    void require_normalized(const char *what) const;

    [[nodiscard]] StateVector normalized() const;
    [[nodiscard]] StateVector scaled(Complex factor) const;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

[[nodiscard]] StateVector new_basis_state(int num_qubits,
                                          std::uint64_t basis_index);

/// Boolean (or small-integer) black box evaluated on an n-bit index.
using Oracle = std::function<std::uint64_t(std::uint64_t)>;

/**
 * 2^{-n/2} sum_x |x>|f(x)> over n index qubits and a flag register of
 * `flag_width` qubits. Throws OverflowError if some f(x) >= 2^flag_width.
 */
[[nodiscard]] StateVector prepare_oracle_superposition(int num_index_qubits,
                                                       int flag_width,
                                                       const Oracle &oracle);

/// Number of basis states with |amplitude| above the support threshold
/// whose `qubit` reads `value`.
[[nodiscard]] std::size_t count_support_with(const StateVector &state,
                                             int qubit, bool value);

} // namespace qsim
