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
#include "qsim/density.hpp"

#include <algorithm>
#include <string>

#include "qsim/error.hpp"

namespace qsim {

Grouping qubit_grouping(int num_qubits) {
    Grouping grouping;
    grouping.reserve(static_cast<std::size_t>(num_qubits));
    for (int q = 0; q < num_qubits; ++q) {
        grouping.push_back({q});
    }
    return grouping;
}

void validate_grouping(const Grouping &grouping, int num_qubits) {
    std::vector<int> owner(static_cast<std::size_t>(num_qubits), -1);
    for (std::size_t p = 0; p < grouping.size(); ++p) {
        if (grouping[p].empty()) {
            throw ArgumentError("particle " + std::to_string(p) +
                                " owns no qubits");
        }
        for (int q : grouping[p]) {
            if (q < 0 || q >= num_qubits) {
                throw ArgumentError("grouping names qubit " +
                                    std::to_string(q) + " outside register");
            }
            if (owner[static_cast<std::size_t>(q)] != -1) {
                throw ArgumentError("qubit " + std::to_string(q) +
                                    " assigned to two particles");
            }
            owner[static_cast<std::size_t>(q)] = static_cast<int>(p);
        }
    }
    if (std::ranges::find(owner, -1) != owner.end()) {
        throw ArgumentError("grouping does not cover every qubit");
    }
}

std::vector<int> qubits_of(const Grouping &grouping,
                           std::span<const int> particles) {
    std::vector<int> qubits;
    for (int p : particles) {
        if (p < 0 || static_cast<std::size_t>(p) >= grouping.size()) {
            throw ArgumentError("particle index " + std::to_string(p) +
                                " out of range");
        }
        const auto &owned = grouping[static_cast<std::size_t>(p)];
        qubits.insert(qubits.end(), owned.begin(), owned.end());
    }
    return qubits;
}

Eigen::MatrixXcd bipartite_coefficients(const StateVector &state,
                                        std::span<const int> kept) {
    const int n = state.num_qubits();
    std::vector<bool> is_kept(static_cast<std::size_t>(n), false);
    for (int q : kept) {
        (void)state.mask(q);
        if (is_kept[static_cast<std::size_t>(q)]) {
            throw ArgumentError("duplicate qubit " + std::to_string(q));
        }
        is_kept[static_cast<std::size_t>(q)] = true;
    }
    std::vector<std::size_t> rest_masks;
    for (int q = 0; q < n; ++q) {
        if (!is_kept[static_cast<std::size_t>(q)]) {
            rest_masks.push_back(state.mask(q));
        }
    }
    std::vector<std::size_t> kept_masks;
    for (int q : kept) {
        kept_masks.push_back(state.mask(q));
    }

    const Eigen::Index rows = Eigen::Index{1} << kept_masks.size();
    const Eigen::Index cols = Eigen::Index{1} << rest_masks.size();
    Eigen::MatrixXcd coeff(rows, cols);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        Eigen::Index a = 0;
        for (std::size_t m : kept_masks) {
            a = (a << 1) | ((i & m) != 0 ? 1 : 0);
        }
        Eigen::Index b = 0;
        for (std::size_t m : rest_masks) {
            b = (b << 1) | ((i & m) != 0 ? 1 : 0);
        }
        coeff(a, b) = amps[i];
    }
    return coeff;
}

DensityMatrix reduced_density(const StateVector &state,
                              std::span<const int> keep,
                              const Grouping &grouping) {
    validate_grouping(grouping, state.num_qubits());
    if (keep.empty() || keep.size() >= grouping.size()) {
        throw ArgumentError("kept particles must form a non-empty proper "
                            "subset");
    }
    std::vector<int> sorted(keep.begin(), keep.end());
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end()) {
        throw ArgumentError("kept particle listed twice");
    }
    state.require_normalized("reduced_density");
    const auto qubits = qubits_of(grouping, keep);
    const Eigen::MatrixXcd coeff = bipartite_coefficients(state, qubits);
    return coeff * coeff.adjoint();
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix &m) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(m,
                                                        Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::ranges::sort(out, std::greater<>());
    return out;
}

std::vector<double> schmidt_spectrum(const StateVector &state,
                                     std::span<const int> kept) {
    const Eigen::MatrixXcd coeff = bipartite_coefficients(state, kept);
    // Nonzero spectra of C C^dag and C^dag C coincide.
    const bool rows_smaller = coeff.rows() <= coeff.cols();
    const DensityMatrix gram = rows_smaller
                                   ? DensityMatrix(coeff * coeff.adjoint())
                                   : DensityMatrix(coeff.adjoint() * coeff);
    auto values = hermitian_eigenvalues(gram);
    values.resize(static_cast<std::size_t>(coeff.rows()), 0.0);
    return values;
}

} // namespace qsim
