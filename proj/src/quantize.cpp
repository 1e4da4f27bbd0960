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
#include "qsim/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsim/error.hpp"

namespace qsim::cmqm {

namespace {

constexpr double kRangeSlack = 1e-12;
/// Relative slack on the flush threshold so a grid point perturbed by
/// floating-point noise (0.4999999999 on a 0.5 grid) is not wiped out.
constexpr double kGridSlack = 1e-9;

/// Nearest integer, ties to even, independent of the FP rounding mode.
double round_half_even(double x) {
    const double lower = std::floor(x);
    const double diff = x - lower;
    if (diff > 0.5) {
        return lower + 1.0;
    }
    if (diff < 0.5) {
        return lower;
    }
    return std::fmod(lower, 2.0) == 0.0 ? lower : lower + 1.0;
}

} // namespace

void validate_mu(int mu) {
    if (mu < 2 || mu > kMaxMu || mu % 2 != 0) {
        throw ArgumentError("mu must be an even integer in [2, " +
                            std::to_string(kMaxMu) + "], got " +
                            std::to_string(mu));
    }
}

double resolution(int mu) {
    validate_mu(mu);
    return std::ldexp(1.0, -mu / 2);
}

double quantize_component(double value, int mu) {
    const double grid = resolution(mu);
    if (std::abs(value) < grid * (1.0 - kGridSlack)) {
        return 0.0;
    }
    return std::ldexp(round_half_even(std::ldexp(value, mu / 2)), -mu / 2);
}

double quantize_probability(double value, int mu) {
    if (value < resolution(mu)) {
        return 0.0;
    }
    return std::ldexp(round_half_even(std::ldexp(value, mu)), -mu);
}

std::vector<Complex> quantize_amplitudes(std::span<const Complex> amplitudes,
                                         int mu) {
    validate_mu(mu);
    std::vector<Complex> out;
    out.reserve(amplitudes.size());
    for (const Complex &a : amplitudes) {
        for (double part : {a.real(), a.imag()}) {
            if (!(std::abs(part) <= 1.0 + kRangeSlack)) {
                throw RangeError("amplitude component " + std::to_string(part) +
                                 " outside [-1, 1]");
            }
        }
        const double re = std::clamp(a.real(), -1.0, 1.0);
        const double im = std::clamp(a.imag(), -1.0, 1.0);
        out.emplace_back(quantize_component(re, mu),
                         quantize_component(im, mu));
    }
    return out;
}

QuantizedState quantize(const StateVector &state, int mu) {
    const double before = state.squared_norm();
    if (!(before > 0.0)) {
        throw DegenerateStateError("cannot quantize the zero state");
    }
    StateVector grid_state(quantize_amplitudes(state.amplitudes(), mu));
    const double loss = 1.0 - grid_state.squared_norm() / before;
    return {std::move(grid_state), mu, loss, loss > resolution(mu)};
}

std::uint64_t superposition_bound(int mu) {
    validate_mu(mu);
    if (mu >= 64) {
        throw RangeError("2^mu does not fit in 64 bits");
    }
    return std::uint64_t{1} << mu;
}

double reduced_planck(EnergyUnits units) noexcept {
    return units == EnergyUnits::SI ? 1.0545718e-34 : 1.0;
}

void HamiltonianSpec::validate() const {
    if (energies.empty()) {
        throw ArgumentError("Hamiltonian spectrum is empty");
    }
    for (double e : energies) {
        if (!std::isfinite(e)) {
            throw ArgumentError("Hamiltonian energy is not finite");
        }
    }
}

double HamiltonianSpec::mean_energy() const {
    validate();
    double total = 0.0;
    for (double e : energies) {
        total += e;
    }
    return total / static_cast<double>(energies.size());
}

double computational_rate(const HamiltonianSpec &h, int mu) {
    validate_mu(mu);
    h.validate();
    double total = 0.0;
    for (double e : h.energies) {
        total += e;
    }
    return std::ldexp(total, mu / 2) / reduced_planck(h.units);
}

double computational_rate_mean_form(const HamiltonianSpec &h, int mu) {
    validate_mu(mu);
    const double d = static_cast<double>(h.dimension());
    return std::ldexp(d * h.mean_energy(), mu / 2) / reduced_planck(h.units);
}

std::vector<Complex> truncated_coherent_state(Complex alpha, int cutoff) {
    if (cutoff < 1) {
        throw ArgumentError("Fock cutoff must be positive");
    }
    std::vector<Complex> amps(static_cast<std::size_t>(cutoff));
    amps[0] = std::exp(-std::norm(alpha) / 2.0);
    for (int k = 1; k < cutoff; ++k) {
        amps[static_cast<std::size_t>(k)] =
            amps[static_cast<std::size_t>(k - 1)] * alpha /
            std::sqrt(static_cast<double>(k));
    }
    return amps;
}

double coherent_state_fidelity(Complex alpha, int cutoff, int mu) {
    validate_mu(mu);
    const auto exact = truncated_coherent_state(alpha, cutoff);
    double exact_norm2 = 0.0;
    for (const auto &a : exact) {
        exact_norm2 += std::norm(a);
    }
    if (exact_norm2 < 1.0 - 1e-12) {
        throw ValidationError("Fock cutoff " + std::to_string(cutoff) +
                              " keeps only " + std::to_string(exact_norm2) +
                              " of the coherent-state norm");
    }
    const auto grid = quantize_amplitudes(exact, mu);
    double grid_norm2 = 0.0;
    Complex overlap{0.0, 0.0};
    for (std::size_t k = 0; k < exact.size(); ++k) {
        grid_norm2 += std::norm(grid[k]);
        overlap += std::conj(grid[k]) * exact[k];
    }
    if (grid_norm2 == 0.0) {
        return 0.0;
    }
    return std::norm(overlap) / (grid_norm2 * exact_norm2);
}

} // namespace qsim::cmqm
