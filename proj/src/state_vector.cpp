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
#include "qsim/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qsim/error.hpp"

namespace qsim {

namespace {

void check_qubit_count(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
        throw ResourceError("register of " + std::to_string(num_qubits) +
                            " qubits exceeds the dense bound of " +
                            std::to_string(kMaxQubits));
    }
}

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : num_qubits_(0), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty() || !std::has_single_bit(amplitudes_.size())) {
        throw ArgumentError("amplitude count " +
                            std::to_string(amplitudes_.size()) +
                            " is not a power of two");
    }
    num_qubits_ = std::countr_zero(amplitudes_.size());
    check_qubit_count(num_qubits_);
}

std::size_t StateVector::mask(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw RangeError("qubit " + std::to_string(qubit) +
                         " outside register of " + std::to_string(num_qubits_));
    }
    return std::size_t{1} << (num_qubits_ - 1 - qubit);
}

double StateVector::squared_norm() const noexcept {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

bool StateVector::is_normalized(double tol) const noexcept {
    return std::abs(squared_norm() - 1.0) <= tol;
}

void StateVector::require_normalized(const char *what) const {
    const double n2 = squared_norm();
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw ValidationError(std::string(what) +
                              " requires a normalized state (squared norm " +
                              std::to_string(n2) + ")");
    }
}

StateVector StateVector::normalized() const {
    const double n2 = squared_norm();
    if (n2 <= 0.0) {
        throw DegenerateStateError("cannot normalize the zero vector");
    }
    return scaled(Complex{1.0 / std::sqrt(n2), 0.0});
}

StateVector StateVector::scaled(Complex factor) const {
    StateVector out(*this);
    for (auto &a : out.amplitudes_) {
        a *= factor;
    }
    return out;
}

StateVector new_basis_state(int num_qubits, std::uint64_t basis_index) {
    StateVector state(num_qubits);
    if (basis_index >= state.dimension()) {
        throw RangeError("basis index " + std::to_string(basis_index) +
                         " outside a " + std::to_string(num_qubits) +
                         "-qubit register");
    }
    state.amplitudes_mut()[basis_index] = 1.0;
    return state;
}

StateVector prepare_oracle_superposition(int num_index_qubits, int flag_width,
                                         const Oracle &oracle) {
    if (num_index_qubits < 0) {
        throw ArgumentError("negative index register width");
    }
    if (flag_width < 1) {
        throw ArgumentError("flag register needs at least one qubit");
    }
    if (num_index_qubits + flag_width > kMaxQubits) {
        throw ResourceError("oracle register of " +
                            std::to_string(num_index_qubits + flag_width) +
                            " qubits exceeds the dense bound of " +
                            std::to_string(kMaxQubits));
    }
    StateVector state(num_index_qubits + flag_width);
    const std::uint64_t num_inputs = std::uint64_t{1} << num_index_qubits;
    const std::uint64_t flag_limit = std::uint64_t{1} << flag_width;
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(num_inputs));
    auto amps = state.amplitudes_mut();
    for (std::uint64_t x = 0; x < num_inputs; ++x) {
        const std::uint64_t value = oracle(x);
        if (value >= flag_limit) {
            throw OverflowError("oracle value " + std::to_string(value) +
                                " does not fit in " +
                                std::to_string(flag_width) + " flag qubits");
        }
        amps[(x << flag_width) | value] = amplitude;
    }
    return state;
}

std::size_t count_support_with(const StateVector &state, int qubit,
                               bool value) {
    const std::size_t m = state.mask(qubit);
    std::size_t count = 0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (((i & m) != 0) == value &&
            std::norm(amps[i]) > kSupportThreshold * kSupportThreshold) {
            ++count;
        }
    }
    return count;
}

} // namespace qsim
