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
 * Boolean instances and their brute-force ground truth.
 *
 * Assignments are indexed the same way as the register: variable 1 is the
 * most significant bit of an n-bit index x.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsim/state_vector.hpp"

namespace qsim::instances {

/// Largest variable count the exhaustive oracles accept.
inline constexpr int kBruteForceMaxVars = 24;

using Clause = std::vector<int>;

class CnfFormula {
  public:
    /// Throws ArgumentError for n < 1, zero literals, or |literal| > n.
    CnfFormula(int num_vars, std::vector<Clause> clauses);

    [[nodiscard]] int num_vars() const noexcept { return num_vars_; }
    [[nodiscard]] const std::vector<Clause> &clauses() const noexcept {
        return clauses_;
    }

    /// f(x) for an n-bit index x (variable 1 = most significant bit).
    [[nodiscard]] bool evaluate_index(std::uint64_t x) const noexcept;

    /// f as an Oracle usable for state preparation.
    [[nodiscard]] Oracle oracle() const;

    friend bool operator==(const CnfFormula &, const CnfFormula &) = default;

  private:
    struct ClauseMasks {
        std::uint64_t positive;
        std::uint64_t negative;
        bool operator==(const ClauseMasks &) const = default;
    };

    int num_vars_;
    std::vector<Clause> clauses_;
    std::vector<ClauseMasks> masks_;
};

enum class Quantifier { Exists, ForAll };

class QbfInstance {
  public:
    /// prefix[i] quantifies variable i + 1, outermost first.
    QbfInstance(std::vector<Quantifier> prefix, CnfFormula matrix);

    [[nodiscard]] const std::vector<Quantifier> &prefix() const noexcept {
        return prefix_;
    }
    [[nodiscard]] const CnfFormula &matrix() const noexcept { return matrix_; }
    [[nodiscard]] int num_vars() const noexcept { return matrix_.num_vars(); }

    friend bool operator==(const QbfInstance &, const QbfInstance &) = default;

  private:
    std::vector<Quantifier> prefix_;
    CnfFormula matrix_;
};

/// 1 iff every clause has a satisfied literal; assignment[i] is variable i+1.
[[nodiscard]] bool eval_cnf(const CnfFormula &cnf,
                            const std::vector<bool> &assignment);

[[nodiscard]] bool brute_sat(const CnfFormula &cnf);
[[nodiscard]] std::uint64_t brute_count(const CnfFormula &cnf);
[[nodiscard]] bool brute_taut(const CnfFormula &cnf);
/// Recursive evaluation: exists = OR over both branches, forall = AND.
[[nodiscard]] bool brute_qbf(const QbfInstance &qbf);

/// M / (M + (2^n - M) 2^{-4n}): flag-1 probability after G on n qubits.
[[nodiscard]] double nonunitary_success_probability(std::uint64_t num_solutions,
                                                    int num_vars);

/**
 * m clauses of k distinct variables with uniform signs, drawn from
 * qsim::Rng(seed); output is bit-identical on every platform.
 */
[[nodiscard]] CnfFormula random_ksat(int num_vars, int num_clauses, int k,
                                     std::uint64_t seed);

/// random_ksat matrix under a uniformly random quantifier prefix.
[[nodiscard]] QbfInstance random_qbf(int num_vars, int num_clauses, int k,
                                     std::uint64_t seed);

} // namespace qsim::instances
