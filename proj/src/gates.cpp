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
#include "qsim/gates.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qsim/error.hpp"

namespace qsim {

GateMatrix pauli_x() {
    GateMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

GateMatrix hadamard() {
    const double r = std::numbers::sqrt2 / 2.0;
    GateMatrix m(2, 2);
    m << r, r, r, -r;
    return m;
}

GateMatrix cnot() {
    GateMatrix m = GateMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

GateMatrix u3(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    GateMatrix m(2, 2);
    m(0, 0) = c;
    m(0, 1) = -std::polar(s, lambda);
    m(1, 0) = std::polar(s, phi);
    m(1, 1) = std::polar(c, phi + lambda);
    return m;
}

bool is_unitary(const GateMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const GateMatrix product = m.adjoint() * m;
    return (product - GateMatrix::Identity(m.rows(), m.cols()))
               .cwiseAbs()
               .maxCoeff() <= tol;
}

StateVector apply_local_unitary(const StateVector &state,
                                std::span<const int> qubits,
                                const GateMatrix &matrix) {
    const std::size_t k = qubits.size();
    if (k != 1 && k != 2) {
        throw ArgumentError("local unitaries act on one or two qubits, got " +
                            std::to_string(k));
    }
    const Eigen::Index dim = Eigen::Index{1} << k;
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw ArgumentError("gate matrix is " + std::to_string(matrix.rows()) +
                            "x" + std::to_string(matrix.cols()) + " for " +
                            std::to_string(k) + " qubit(s)");
    }
    if (k == 2 && qubits[0] == qubits[1]) {
        throw ArgumentError("duplicate qubit position " +
                            std::to_string(qubits[0]));
    }
    if (!is_unitary(matrix)) {
        throw ValidationError("gate matrix is not unitary");
    }

    StateVector out(state);
    auto amps = out.amplitudes_mut();
    if (k == 1) {
        const std::size_t m = state.mask(qubits[0]);
        const Complex u00 = matrix(0, 0), u01 = matrix(0, 1);
        const Complex u10 = matrix(1, 0), u11 = matrix(1, 1);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & m) != 0) {
                continue;
            }
            const Complex a0 = amps[i];
            const Complex a1 = amps[i | m];
            amps[i] = u00 * a0 + u01 * a1;
            amps[i | m] = u10 * a0 + u11 * a1;
        }
        return out;
    }

    const std::size_t m0 = state.mask(qubits[0]);
    const std::size_t m1 = state.mask(qubits[1]);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & (m0 | m1)) != 0) {
            continue;
        }
        const std::array<std::size_t, 4> idx{i, i | m1, i | m0, i | m0 | m1};
        std::array<Complex, 4> in{};
        for (std::size_t r = 0; r < 4; ++r) {
            in[r] = amps[idx[r]];
        }
        for (std::size_t r = 0; r < 4; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < 4; ++c) {
                acc += matrix(static_cast<Eigen::Index>(r),
                              static_cast<Eigen::Index>(c)) *
                       in[c];
            }
            amps[idx[r]] = acc;
        }
    }
    return out;
}

} // namespace qsim
