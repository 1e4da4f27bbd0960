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
#include "qsim/instances.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qsim/error.hpp"
#include "qsim/random.hpp"

namespace qsim::instances {

namespace {

void check_brute_force_bound(int num_vars) {
    if (num_vars > kBruteForceMaxVars) {
        throw ResourceError("brute-force enumeration limited to " +
                            std::to_string(kBruteForceMaxVars) +
                            " variables, got " + std::to_string(num_vars));
    }
}

bool qbf_branch(const QbfInstance &qbf, int depth, std::uint64_t prefix_bits) {
    const int n = qbf.num_vars();
    if (depth == n) {
        return qbf.matrix().evaluate_index(prefix_bits);
    }
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - depth);
    const bool exists =
        qbf.prefix()[static_cast<std::size_t>(depth)] == Quantifier::Exists;
    const bool first = qbf_branch(qbf, depth + 1, prefix_bits);
    if (exists == first) {
        // exists: a true branch decides; forall: a false branch decides.
        return first;
    }
    return qbf_branch(qbf, depth + 1, prefix_bits | bit);
}

} // namespace

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars < 1 || num_vars > 63) {
        throw ArgumentError("variable count must lie in [1, 63], got " +
                            std::to_string(num_vars));
    }
    masks_.reserve(clauses_.size());
    for (const auto &clause : clauses_) {
        ClauseMasks m{0, 0};
        for (int lit : clause) {
            if (lit == 0) {
                throw ArgumentError("zero literal inside a clause");
            }
            const int var = std::abs(lit);
            if (var > num_vars) {
                throw ArgumentError("literal " + std::to_string(lit) +
                                    " exceeds variable count " +
                                    std::to_string(num_vars));
            }
            const std::uint64_t bit = std::uint64_t{1} << (num_vars - var);
            (lit > 0 ? m.positive : m.negative) |= bit;
        }
        masks_.push_back(m);
    }
}

bool CnfFormula::evaluate_index(std::uint64_t x) const noexcept {
    for (const auto &m : masks_) {
        if ((x & m.positive) == 0 && (~x & m.negative) == 0) {
            return false;
        }
    }
    return true;
}

Oracle CnfFormula::oracle() const {
    return [formula = *this](std::uint64_t x) -> std::uint64_t {
        return formula.evaluate_index(x) ? 1 : 0;
    };
}

QbfInstance::QbfInstance(std::vector<Quantifier> prefix, CnfFormula matrix)
    : prefix_(std::move(prefix)), matrix_(std::move(matrix)) {
    if (prefix_.size() != static_cast<std::size_t>(matrix_.num_vars())) {
        throw ArgumentError("quantifier prefix has " +
                            std::to_string(prefix_.size()) + " entries for " +
                            std::to_string(matrix_.num_vars()) + " variables");
    }
}

bool eval_cnf(const CnfFormula &cnf, const std::vector<bool> &assignment) {
    if (assignment.size() != static_cast<std::size_t>(cnf.num_vars())) {
        throw ArgumentError(
            "assignment length " + std::to_string(assignment.size()) +
            " does not match " + std::to_string(cnf.num_vars()) + " variables");
    }
    for (const auto &clause : cnf.clauses()) {
        bool satisfied = false;
        for (int lit : clause) {
            const bool value =
                assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
            if (value == (lit > 0)) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) {
            return false;
        }
    }
    return true;
}

bool brute_sat(const CnfFormula &cnf) {
    check_brute_force_bound(cnf.num_vars());
    const std::uint64_t total = std::uint64_t{1} << cnf.num_vars();
    for (std::uint64_t x = 0; x < total; ++x) {
        if (cnf.evaluate_index(x)) {
            return true;
        }
    }
    return false;
}

std::uint64_t brute_count(const CnfFormula &cnf) {
    check_brute_force_bound(cnf.num_vars());
    const std::uint64_t total = std::uint64_t{1} << cnf.num_vars();
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < total; ++x) {
        count += cnf.evaluate_index(x) ? 1 : 0;
    }
    return count;
}

bool brute_taut(const CnfFormula &cnf) {
    return brute_count(cnf) == (std::uint64_t{1} << cnf.num_vars());
}

bool brute_qbf(const QbfInstance &qbf) {
    check_brute_force_bound(qbf.num_vars());
    return qbf_branch(qbf, 0, 0);
}

double nonunitary_success_probability(std::uint64_t num_solutions,
                                      int num_vars) {
    if (num_vars < 1 || num_vars > 63) {
        throw ArgumentError("variable count must lie in [1, 63]");
    }
    const std::uint64_t total = std::uint64_t{1} << num_vars;
    if (num_solutions > total) {
        throw ArgumentError("solution count " + std::to_string(num_solutions) +
                            " exceeds 2^" + std::to_string(num_vars));
    }
    if (num_solutions == 0) {
        return 0.0;
    }
    const double m = static_cast<double>(num_solutions);
    const double rest = static_cast<double>(total - num_solutions);
    return m / (m + rest * std::ldexp(1.0, -4 * num_vars));
}

CnfFormula random_ksat(int num_vars, int num_clauses, int k,
                       std::uint64_t seed) {
    if (num_vars < 1) {
        throw ArgumentError("random_ksat needs at least one variable");
    }
    if (k < 1 || k > num_vars) {
        throw ArgumentError("clause width " + std::to_string(k) +
                            " must lie in [1, " + std::to_string(num_vars) +
                            "]");
    }
    if (num_clauses < 0) {
        throw ArgumentError("negative clause count");
    }
    Rng rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(num_vars));
    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(num_clauses));
    for (int c = 0; c < num_clauses; ++c) {
        std::iota(pool.begin(), pool.end(), 1);
        Clause clause;
        clause.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const auto remaining = static_cast<std::uint64_t>(num_vars - i);
            const std::size_t j =
                static_cast<std::size_t>(i) +
                static_cast<std::size_t>(rng.below(remaining));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            const int var = pool[static_cast<std::size_t>(i)];
            clause.push_back(rng.coin() ? var : -var);
        }
        clauses.push_back(std::move(clause));
    }
    return CnfFormula(num_vars, std::move(clauses));
}

QbfInstance random_qbf(int num_vars, int num_clauses, int k,
                       std::uint64_t seed) {
    CnfFormula matrix = random_ksat(num_vars, num_clauses, k, seed);
    Rng rng(derive_stream_seed(seed, 0));
    std::vector<Quantifier> prefix;
    prefix.reserve(static_cast<std::size_t>(num_vars));
    for (int i = 0; i < num_vars; ++i) {
        prefix.push_back(rng.coin() ? Quantifier::ForAll : Quantifier::Exists);
    }
    return QbfInstance(std::move(prefix), std::move(matrix));
}

} // namespace qsim::instances
