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
 * mu-bit amplitude grid and the quantities derived from it.
 *
 * Each real and imaginary component lives on the grid k * 2^{-mu/2},
 * |k| <= 2^{mu/2}. Components smaller in magnitude than one grid step are
 * unresolvable and flush to zero; all others round to the nearest grid
 * point, ties to even. Rounding never renormalizes.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsim/state_vector.hpp"

namespace qsim::cmqm {

/// Above about 106 the grid is finer than double precision for unit-scale
/// amplitudes, so quantization is effectively off.
inline constexpr int kMaxMu = 128;

/// Throws ArgumentError unless mu is even and in [2, kMaxMu].
void validate_mu(int mu);

/// Grid step and resolution threshold 2^{-mu/2}.
[[nodiscard]] double resolution(int mu);

/// Rounds one real component onto the mu grid.
[[nodiscard]] double quantize_component(double value, int mu);

/// Rounds a probability-like value (eigenvalue) to mu-bit precision,
/// i.e. onto multiples of 2^{-mu}, flushing values below 2^{-mu/2} to zero.
[[nodiscard]] double quantize_probability(double value, int mu);

/// Component-wise quantization of an arbitrary amplitude array.
[[nodiscard]] std::vector<Complex>
quantize_amplitudes(std::span<const Complex> amplitudes, int mu);

struct QuantizedState {
    StateVector state;
    int mu;
    /// 1 - |q|^2 / |psi|^2. Slightly negative when round-up dominates.
    double norm_loss;
    /// norm_loss > 2^{-mu/2}
    bool significant_loss;
};

/// Throws RangeError when a component lies outside [-1, 1].
[[nodiscard]] QuantizedState quantize(const StateVector &state, int mu);

/// D_max = 2^mu, the largest resolvable superposition. mu must be < 64.
[[nodiscard]] std::uint64_t superposition_bound(int mu);

enum class EnergyUnits { Natural, SI };

/// hbar in the given unit system (1, or 1.0545718e-34 J s).
[[nodiscard]] double reduced_planck(EnergyUnits units) noexcept;

struct HamiltonianSpec {
    std::vector<double> energies;
    EnergyUnits units = EnergyUnits::Natural;

    [[nodiscard]] std::size_t dimension() const noexcept {
        return energies.size();
    }
    [[nodiscard]] double mean_energy() const;
    /// Throws ArgumentError for an empty or non-finite spectrum.
    void validate() const;
};

/// 2^{mu/2} sum_j E_j / hbar, in operations per second.
[[nodiscard]] double computational_rate(const HamiltonianSpec &h, int mu);

/// The same rate written as 2^{mu/2} D Ebar / hbar.
[[nodiscard]] double computational_rate_mean_form(const HamiltonianSpec &h,
                                                  int mu);

/**
 * Squared overlap between the Fock-truncated coherent state |alpha> and its
 * mu-grid equivalent (quantized, then renormalized). Throws ValidationError
 * if the truncation keeps less than 1 - 1e-12 of the norm.
 */
[[nodiscard]] double coherent_state_fidelity(Complex alpha, int cutoff, int mu);

/// Fock amplitudes e^{-|a|^2/2} a^k / sqrt(k!), k < cutoff.
[[nodiscard]] std::vector<Complex> truncated_coherent_state(Complex alpha,
                                                            int cutoff);

} // namespace qsim::cmqm
