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
 * Decision procedures on the variant-QM primitives: nonlinear SAT, #SAT and
 * TQBF, and the non-unitary SAT/TAUT procedures. Oracle values are computed
 * classically while preparing sum_x |x>|f(x)>.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsim/instances.hpp"
#include "qsim/variant.hpp"

namespace qsim::solvers {

/// Widest instance the simulated backends accept.
inline constexpr int kSimulatedMaxVars = 14;

struct GateStep {
    std::string gate; ///< "OR", "AND" or "COUNT"
    int control;      ///< index qubit (0-based, i.e. variable control + 1)
    /// Basis states with flag (or a nonzero counter) after this step.
    std::uint64_t flag_one_terms;
};

struct SolverTrace {
    std::vector<GateStep> steps;
    bool final_flag_disentangled = false;
    std::uint64_t decision = 0;
};

struct SatOutcome {
    bool decision;
    SolverTrace trace;
};

/**
 * Nonlinear-OR search. Index qubits are paired with the flag in `order`
 * (ascending when empty); exactly n gates are applied. Throws
 * ConsistencyError if the flag ends up entangled.
 */
[[nodiscard]] SatOutcome solve_sat_nonlinear(const instances::CnfFormula &cnf,
                                             std::span<const int> order = {});

struct CountOutcome {
    std::uint64_t count;
    SolverTrace trace;
};

/// Nonlinear counting with an (n+1)-qubit counter.
[[nodiscard]] CountOutcome
count_sat_nonlinear(const instances::CnfFormula &cnf);

struct NonunitaryOutcome {
    bool decision;
    /// Flag-1 probability (SAT) or flag-0 probability (TAUT).
    double probability;
    double error_bound;
};

/// G with scale n on the flag, then Born readout of the flag.
[[nodiscard]] NonunitaryOutcome
solve_sat_nonunitary(const instances::CnfFormula &cnf);

/// XGX on the flag; tautology iff no flag-0 weight survives the readout.
[[nodiscard]] NonunitaryOutcome
solve_taut_nonunitary(const instances::CnfFormula &cnf);

struct QbfOutcome {
    bool decision;
    SolverTrace trace;
};

/**
 * Alternating nonlinear OR (exists) / AND (forall) gates from the innermost
 * variable outwards. A custom `order` is accepted for experiments; any order
 * other than innermost-first may give a wrong answer.
 */
[[nodiscard]] QbfOutcome solve_tqbf_nonlinear(const instances::QbfInstance &qbf,
                                              std::span<const int> order = {});

} // namespace qsim::solvers
