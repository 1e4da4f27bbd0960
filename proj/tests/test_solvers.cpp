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
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "qsim/error.hpp"
#include "qsim/instances.hpp"
#include "qsim/random.hpp"
#include "qsim/solvers.hpp"

using namespace qsim;
using namespace qsim::instances;
using namespace qsim::solvers;

namespace {

constexpr auto E = Quantifier::Exists;
constexpr auto A = Quantifier::ForAll;

/// Closed form evaluated without the library helper.
double reference_probability(std::uint64_t m, int n) {
    const double total = std::ldexp(1.0, n);
    const double md = static_cast<double>(m);
    return md / (md + (total - md) * std::ldexp(1.0, -4 * n));
}

} // namespace

TEST_CASE("nonlinear SAT examples") {
    CHECK_FALSE(solve_sat_nonlinear(CnfFormula(1, {{1}, {-1}})).decision);
    CHECK(solve_sat_nonlinear(CnfFormula(2, {{1, 2}})).decision);

    const auto unique = solve_sat_nonlinear(CnfFormula(2, {{1}, {2}}));
    CHECK(unique.decision);
    REQUIRE(unique.trace.steps.size() == 2);
    CHECK(unique.trace.steps[0].flag_one_terms == 2);
    CHECK(unique.trace.steps[1].flag_one_terms == 4);
    CHECK(unique.trace.final_flag_disentangled);
}

TEST_CASE("nonlinear SAT applies exactly one gate per variable") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 1 + static_cast<int>(seed % 8);
        const auto f = random_ksat(n, 2 * n, std::min(3, n), seed);
        const auto out = solve_sat_nonlinear(f);
        CHECK(out.trace.steps.size() == static_cast<std::size_t>(n));
        CHECK(out.decision == (oracle::count_models(n, f.clauses()) > 0));
    }
}

TEST_CASE("doubling law on unique-solution instances") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 20 && seed < 5000; ++seed) {
        const int n = 3 + static_cast<int>(seed % 6);
        const auto f = random_ksat(n, 4 * n + 2, 3, seed);
        if (oracle::count_models(n, f.clauses()) != 1) {
            continue;
        }
        const auto out = solve_sat_nonlinear(f);
        for (std::size_t k = 0; k < out.trace.steps.size(); ++k) {
            CHECK(out.trace.steps[k].flag_one_terms == (std::uint64_t{2} << k));
        }
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("SAT decision does not depend on gate order") {
    Rng rng(11);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        const auto f = random_ksat(n, 3 * n, std::min(3, n), seed + 77);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = order.size() - 1; i > 0; --i) {
            std::swap(order[i], order[rng.below(i + 1)]);
        }
        CHECK(solve_sat_nonlinear(f, order).decision ==
              solve_sat_nonlinear(f).decision);
    }
    const std::vector<int> bad{0, 0};
    CHECK_THROWS_AS((void)solve_sat_nonlinear(CnfFormula(2, {}), bad),
                    ArgumentError);
}

TEST_CASE("nonlinear count examples") {
    CHECK(count_sat_nonlinear(CnfFormula(1, {{1}, {-1}})).count == 0);
    CHECK(count_sat_nonlinear(CnfFormula(2, {{1, 2}})).count == 3);
    CHECK(count_sat_nonlinear(CnfFormula(3, {})).count == 8);
    const auto traced = count_sat_nonlinear(CnfFormula(2, {{1, 2}}));
    REQUIRE(traced.trace.steps.size() == 2);
    CHECK(traced.trace.steps[0].gate == "COUNT");
}

TEST_CASE("nonlinear count agrees with the model counter") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 1 + static_cast<int>(seed % 9);
        const auto f = random_ksat(n, static_cast<int>(seed % 12),
                                   std::min(3, n), seed + 5);
        CHECK(count_sat_nonlinear(f).count ==
              oracle::count_models(n, f.clauses()));
    }
    // the counter needs 2n+1 qubits, so n = 12 exceeds the register cap
    CHECK_THROWS_AS((void)count_sat_nonlinear(CnfFormula(12, {})),
                    ResourceError);
}

TEST_CASE("nonunitary SAT examples") {
    const auto unsat = solve_sat_nonunitary(CnfFormula(3, {{1}, {-1}}));
    CHECK_FALSE(unsat.decision);
    CHECK(unsat.probability == 0.0);

    const auto one = solve_sat_nonunitary(CnfFormula(2, {{1}, {2}}));
    CHECK(one.decision);
    CHECK(std::abs(one.probability - 256.0 / 259.0) < 1e-12);
    CHECK(one.error_bound == std::ldexp(1.0, -4));

    const auto all = solve_sat_nonunitary(CnfFormula(3, {}));
    CHECK(all.probability == 1.0);
}

TEST_CASE("nonunitary probability matches the closed form") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 1 + static_cast<int>(seed % 10);
        const auto f = random_ksat(n, static_cast<int>(seed % 4) * n,
                                   std::min(3, n), seed + 300);
        const auto m = oracle::count_models(n, f.clauses());
        const auto out = solve_sat_nonunitary(f);
        CHECK(std::abs(out.probability - reference_probability(m, n)) < 1e-12);
        CHECK(out.decision == (m > 0));
        if (m == 0) {
            CHECK(out.probability == 0.0);
        }
    }
}

TEST_CASE("nonunitary TAUT") {
    CHECK(solve_taut_nonunitary(CnfFormula(2, {})).decision);
    CHECK_FALSE(solve_taut_nonunitary(CnfFormula(1, {{1}})).decision);
    CHECK(solve_taut_nonunitary(CnfFormula(2, {{1, -1}, {2, -2, 1}})).decision);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 1 + static_cast<int>(seed % 6);
        const auto f = random_ksat(n, static_cast<int>(seed % 3),
                                   std::min(3, n), seed + 9);
        const bool taut =
            oracle::count_models(n, f.clauses()) == (std::uint64_t{1} << n);
        CHECK(solve_taut_nonunitary(f).decision == taut);
    }
}

TEST_CASE("TQBF examples") {
    CHECK(
        solve_tqbf_nonlinear(QbfInstance({E}, CnfFormula(1, {{1}}))).decision);
    CHECK_FALSE(
        solve_tqbf_nonlinear(QbfInstance({A}, CnfFormula(1, {{1}}))).decision);
    const QbfInstance alternating({E, A, E, A},
                                  CnfFormula(4, {{1, -3, 4}, {-2, 3, -4}}));
    const auto out = solve_tqbf_nonlinear(alternating);
    CHECK(out.decision);
    CHECK(out.decision == brute_qbf(alternating));
    REQUIRE(out.trace.steps.size() == 4);
    CHECK(out.trace.steps[0].control == 3);
    CHECK(out.trace.steps[0].gate == "AND");
    CHECK(out.trace.steps[3].control == 0);
    CHECK(out.trace.steps[3].gate == "OR");
}

TEST_CASE("TQBF agrees with the independent fold") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 1 + static_cast<int>(seed % 8);
        const auto q = random_qbf(n, 2 * n, std::min(3, n), seed + 40);
        std::vector<bool> forall;
        for (auto quant : q.prefix()) {
            forall.push_back(quant == A);
        }
        CHECK(solve_tqbf_nonlinear(q).decision ==
              oracle::qbf_fold(n, forall, q.matrix().clauses()));
    }
}

TEST_CASE("TQBF is sensitive to processing order") {
    // forall x1 exists x2: x1 xor x2 is true; innermost-last gives false
    const QbfInstance xor_qbf({A, E}, CnfFormula(2, {{1, 2}, {-1, -2}}));
    CHECK(brute_qbf(xor_qbf));
    CHECK(solve_tqbf_nonlinear(xor_qbf).decision);
    const std::vector<int> ascending{0, 1};
    CHECK_FALSE(solve_tqbf_nonlinear(xor_qbf, ascending).decision);
}

TEST_CASE("simulated solvers enforce the size bound") {
    const CnfFormula big(kSimulatedMaxVars + 1, {});
    CHECK_THROWS_AS((void)solve_sat_nonlinear(big), ResourceError);
    CHECK_THROWS_AS((void)solve_sat_nonunitary(big), ResourceError);
}
