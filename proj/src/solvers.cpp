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
#include "qsim/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsim/error.hpp"
#include "qsim/gates.hpp"
#include "qsim/measurement.hpp"

namespace qsim::solvers {

using instances::CnfFormula;
using instances::QbfInstance;
using instances::Quantifier;
using variant::NonlinearMode;

namespace {

void check_simulated_bound(int num_vars) {
    if (num_vars > kSimulatedMaxVars) {
        throw ResourceError("simulated backends are limited to " +
                            std::to_string(kSimulatedMaxVars) +
                            " variables, got " + std::to_string(num_vars));
    }
}

std::vector<int> resolve_order(std::span<const int> order, int num_vars,
                               bool descending) {
    std::vector<int> resolved(order.begin(), order.end());
    if (resolved.empty()) {
        resolved.resize(static_cast<std::size_t>(num_vars));
        std::iota(resolved.begin(), resolved.end(), 0);
        if (descending) {
            std::ranges::reverse(resolved);
        }
        return resolved;
    }
    std::vector<int> sorted = resolved;
    std::ranges::sort(sorted);
    for (int i = 0; i < num_vars; ++i) {
        if (sorted.size() != static_cast<std::size_t>(num_vars) ||
            sorted[static_cast<std::size_t>(i)] != i) {
            throw ArgumentError("gate order must be a permutation of the "
                                "index qubits");
        }
    }
    return resolved;
}

/// Flag value shared by the whole support, if there is one.
std::optional<bool> disentangled_flag(const StateVector &state, int flag) {
    const std::size_t ones = count_support_with(state, flag, true);
    const std::size_t zeros = count_support_with(state, flag, false);
    if (ones > 0 && zeros == 0) {
        return true;
    }
    if (zeros > 0 && ones == 0) {
        return false;
    }
    return std::nullopt;
}

SolverTrace run_flag_gates(StateVector state, int flag,
                           std::span<const int> order,
                           const std::vector<NonlinearMode> &mode_of) {
    SolverTrace trace;
    for (int control : order) {
        const NonlinearMode mode = mode_of[static_cast<std::size_t>(control)];
        state = variant::nonlinear_gate(state, control, flag, mode);
        trace.steps.push_back({std::string(variant::to_string(mode)), control,
                               count_support_with(state, flag, true)});
    }
    const auto value = disentangled_flag(state, flag);
    if (!value) {
        throw ConsistencyError("flag still entangled after " +
                               std::to_string(order.size()) + " gates");
    }
    trace.final_flag_disentangled = true;
    trace.decision = *value ? 1 : 0;
    return trace;
}

/// Born weight on one flag value, divided by the total. Summing both halves
/// separately keeps the result exactly 0 or 1 when one side is empty.
double flag_probability(const StateVector &state, int flag, bool value) {
    const std::size_t bit = state.mask(flag);
    double on = 0.0;
    double off = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        (((i & bit) != 0) == value ? on : off) += std::norm(amps[i]);
    }
    return on / (on + off);
}

} // namespace

SatOutcome solve_sat_nonlinear(const CnfFormula &cnf,
                               std::span<const int> order) {
    const int n = cnf.num_vars();
    check_simulated_bound(n);
    const auto resolved = resolve_order(order, n, false);
    StateVector state = prepare_oracle_superposition(n, 1, cnf.oracle());
    const std::vector<NonlinearMode> modes(static_cast<std::size_t>(n),
                                           NonlinearMode::Or);
    SolverTrace trace = run_flag_gates(std::move(state), n, resolved, modes);
    const bool decision = trace.decision == 1;
    return {decision, std::move(trace)};
}

CountOutcome count_sat_nonlinear(const CnfFormula &cnf) {
    const int n = cnf.num_vars();
    check_simulated_bound(n);
    const int width = n + 1;
    StateVector state = prepare_oracle_superposition(n, width, cnf.oracle());
    std::vector<int> counter(static_cast<std::size_t>(width));
    std::iota(counter.begin(), counter.end(), n);

    SolverTrace trace;
    for (int control = 0; control < n; ++control) {
        state = variant::nonlinear_count(state, control, counter);
        // Terms whose counter is nonzero.
        std::uint64_t nonzero = 0;
        const std::size_t counter_bits = (std::size_t{1} << width) - 1;
        const auto amps = state.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & counter_bits) != 0 &&
                std::norm(amps[i]) > kSupportThreshold * kSupportThreshold) {
                ++nonzero;
            }
        }
        trace.steps.push_back({"COUNT", control, nonzero});
    }

    std::optional<std::uint64_t> reading;
    const std::size_t counter_bits = (std::size_t{1} << width) - 1;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::norm(amps[i]) <= kSupportThreshold * kSupportThreshold) {
            continue;
        }
        const std::uint64_t value = i & counter_bits;
        if (reading && *reading != value) {
            throw ConsistencyError("counter still entangled after " +
                                   std::to_string(n) + " counting gates");
        }
        reading = value;
    }
    if (!reading) {
        throw ConsistencyError("counting left an empty support");
    }
    trace.final_flag_disentangled = true;
    trace.decision = *reading;
    return {*reading, std::move(trace)};
}

NonunitaryOutcome solve_sat_nonunitary(const CnfFormula &cnf) {
    const int n = cnf.num_vars();
    check_simulated_bound(n);
    const StateVector prepared =
        prepare_oracle_superposition(n, 1, cnf.oracle());
    const double p_one =
        flag_probability(variant::apply_g(prepared, n, n), n, true);
    return {p_one > 0.5, p_one, std::ldexp(1.0, -2 * n)};
}

NonunitaryOutcome solve_taut_nonunitary(const CnfFormula &cnf) {
    const int n = cnf.num_vars();
    check_simulated_bound(n);
    const StateVector prepared =
        prepare_oracle_superposition(n, 1, cnf.oracle());
    const double p_zero =
        flag_probability(variant::apply_xgx(prepared, n, n), n, false);
    return {p_zero <= 0.5, p_zero, std::ldexp(1.0, -2 * n)};
}

QbfOutcome solve_tqbf_nonlinear(const QbfInstance &qbf,
                                std::span<const int> order) {
    const int n = qbf.num_vars();
    check_simulated_bound(n);
    const auto resolved = resolve_order(order, n, true);
    StateVector state =
        prepare_oracle_superposition(n, 1, qbf.matrix().oracle());
    std::vector<NonlinearMode> modes;
    modes.reserve(static_cast<std::size_t>(n));
    for (Quantifier q : qbf.prefix()) {
        modes.push_back(q == Quantifier::Exists ? NonlinearMode::Or
                                                : NonlinearMode::And);
    }
    SolverTrace trace = run_flag_gates(std::move(state), n, resolved, modes);
    const bool decision = trace.decision == 1;
    return {decision, std::move(trace)};
}

} // namespace qsim::solvers
