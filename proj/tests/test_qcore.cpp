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
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "qsim/density.hpp"
#include "qsim/error.hpp"
#include "qsim/gates.hpp"
#include "qsim/instances.hpp"
#include "qsim/measurement.hpp"
#include "qsim/state_vector.hpp"

using namespace qsim;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

GateMatrix to_gate(const oracle::Dense &m) {
    GateMatrix g(static_cast<Eigen::Index>(m.size()),
                 static_cast<Eigen::Index>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                m[r][c];
        }
    }
    return g;
}

oracle::Dense to_dense(const GateMatrix &g) {
    oracle::Dense m(static_cast<std::size_t>(g.rows()),
                    std::vector<oracle::C>(static_cast<std::size_t>(g.cols())));
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
        for (Eigen::Index c = 0; c < g.cols(); ++c) {
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                g(r, c);
        }
    }
    return m;
}

StateVector bell() { return StateVector({kInvSqrt2, 0.0, 0.0, kInvSqrt2}); }

StateVector w_state() {
    const double a = 1.0 / std::sqrt(3.0);
    return StateVector({0.0, a, a, 0.0, a, 0.0, 0.0, 0.0});
}

} // namespace

TEST_CASE("new_basis_state") {
    CHECK(new_basis_state(1, 0) == StateVector({1.0, 0.0}));
    CHECK(new_basis_state(2, 3) == StateVector({0.0, 0.0, 0.0, 1.0}));
    const auto scalar = new_basis_state(0, 0);
    CHECK(scalar.num_qubits() == 0);
    CHECK(scalar.dimension() == 1);
    CHECK(scalar[0] == Complex(1.0));
    CHECK_THROWS_AS((void)new_basis_state(2, 4), RangeError);
    CHECK_THROWS_AS((void)new_basis_state(25, 0), ResourceError);
}

TEST_CASE("StateVector rejects non power-of-two arrays") {
    CHECK_THROWS_AS(StateVector(std::vector<Complex>(3)), ArgumentError);
    CHECK_THROWS_AS(StateVector(std::vector<Complex>{}), ArgumentError);
}

TEST_CASE("prepare_oracle_superposition") {
    SUBCASE("constant zero oracle") {
        const auto s = prepare_oracle_superposition(
            1, 1, [](std::uint64_t) { return std::uint64_t{0}; });
        CHECK(s == StateVector({kInvSqrt2, 0.0, kInvSqrt2, 0.0}));
    }
    SUBCASE("constant one oracle") {
        const auto s = prepare_oracle_superposition(
            1, 1, [](std::uint64_t) { return std::uint64_t{1}; });
        CHECK(s == StateVector({0.0, kInvSqrt2, 0.0, kInvSqrt2}));
    }
    SUBCASE("x1 and x2") {
        const instances::CnfFormula cnf(2, {{1}, {2}});
        const auto s = prepare_oracle_superposition(2, 1, cnf.oracle());
        // Enumerated f: 00->0, 01->0, 10->0, 11->1.
        const std::vector<Complex> expected{0.5, 0, 0.5, 0, 0.5, 0, 0, 0.5};
        CHECK(s == StateVector(expected));
        CHECK(s.is_normalized());
    }
    SUBCASE("overflow") {
        CHECK_THROWS_AS((void)prepare_oracle_superposition(
                            2, 1, [](std::uint64_t x) { return x; }),
                        OverflowError);
    }
}

TEST_CASE("apply_local_unitary on textbook gates") {
    const auto one = apply_local_unitary(new_basis_state(1, 0), {0}, pauli_x());
    CHECK(one == new_basis_state(1, 1));

    const auto plus =
        apply_local_unitary(new_basis_state(1, 0), {0}, hadamard());
    CHECK(std::abs(plus[0] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(plus[1] - kInvSqrt2) < 1e-15);

    const StateVector plus_zero({kInvSqrt2, 0.0, kInvSqrt2, 0.0});
    const auto b = apply_local_unitary(plus_zero, {0, 1}, cnot());
    CHECK(b == bell());
}

TEST_CASE("apply_local_unitary validation") {
    GateMatrix bad(2, 2);
    bad << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS((void)apply_local_unitary(new_basis_state(1, 0), {0}, bad),
                    ValidationError);
    CHECK_THROWS_AS(
        (void)apply_local_unitary(new_basis_state(2, 0), {1, 1}, cnot()),
        ArgumentError);
    CHECK_THROWS_AS(
        (void)apply_local_unitary(new_basis_state(2, 0), {0}, cnot()),
        ArgumentError);
    CHECK_THROWS_AS(
        (void)apply_local_unitary(new_basis_state(2, 0), {2}, pauli_x()),
        RangeError);
}

TEST_CASE("apply_local_unitary matches the embedded dense operator") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4));
        const auto psi = oracle::random_state(n, rng);
        const bool two = rng.coin();
        std::vector<int> qubits{
            static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))};
        if (two) {
            int q = qubits[0];
            while (q == qubits[0]) {
                q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            }
            qubits.push_back(q);
        }
        const auto u = oracle::random_unitary(two ? 4 : 2, rng);
        const auto expected = oracle::matvec(oracle::embed(u, qubits, n), psi);
        const auto got =
            apply_local_unitary(StateVector(psi), qubits, to_gate(u));
        for (std::size_t i = 0; i < psi.size(); ++i) {
            CHECK(std::abs(got[i] - expected[i]) < 1e-12);
        }
    }
}

TEST_CASE("unitary application preserves the norm and inverts") {
    Rng rng(5);
    for (int n = 1; n <= 12; ++n) {
        const StateVector psi(oracle::random_state(n, rng));
        StateVector s = psi;
        std::vector<std::pair<std::vector<int>, GateMatrix>> applied;
        for (int g = 0; g < 6; ++g) {
            std::vector<int> qubits{
                static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))};
            if (n > 1 && rng.coin()) {
                int q = qubits[0];
                while (q == qubits[0]) {
                    q = static_cast<int>(
                        rng.below(static_cast<std::uint64_t>(n)));
                }
                qubits.push_back(q);
            }
            const GateMatrix u = to_gate(
                oracle::random_unitary(qubits.size() == 2 ? 4 : 2, rng));
            s = apply_local_unitary(s, qubits, u);
            CHECK(std::abs(s.squared_norm() - psi.squared_norm()) <=
                  1e-12 * psi.squared_norm());
            applied.emplace_back(qubits, u);
        }
        for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
            s = apply_local_unitary(s, it->first, it->second.adjoint());
        }
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            CHECK(std::abs(s[i] - psi[i]) < 1e-10);
        }
    }
}

TEST_CASE("outcome_distribution") {
    SUBCASE("uniform state under p = 1") {
        const StateVector s({0.5, 0.5, 0.5, 0.5});
        const auto d = outcome_distribution(s, MeasurementRule(1.0));
        for (double p : d) {
            CHECK(p == doctest::Approx(0.25).epsilon(1e-14));
        }
    }
    SUBCASE("Born rule") {
        const StateVector s({std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0)});
        const auto d = outcome_distribution(s, MeasurementRule::born());
        CHECK(std::abs(d[0] - 1.0 / 3.0) < 1e-12);
        CHECK(std::abs(d[1] - 2.0 / 3.0) < 1e-12);
    }
    SUBCASE("p = 4") {
        const StateVector s({0.6, 0.8});
        const auto d = outcome_distribution(s, MeasurementRule(4.0));
        // 0.6^4 = 0.1296, 0.8^4 = 0.4096, sum 0.5392
        CHECK(std::abs(d[0] - 0.1296 / 0.5392) < 1e-12);
        CHECK(std::abs(d[1] - 0.4096 / 0.5392) < 1e-12);
        CHECK(d[0] == doctest::Approx(0.24036).epsilon(1e-4));
    }
    SUBCASE("degenerate") {
        CHECK_THROWS_AS(
            (void)outcome_distribution(StateVector(2), MeasurementRule::born()),
            DegenerateStateError);
    }
    SUBCASE("invalid exponent") {
        CHECK_THROWS_AS(MeasurementRule(0.0), ArgumentError);
        CHECK_THROWS_AS(MeasurementRule(-1.0), ArgumentError);
        CHECK_THROWS_AS(MeasurementRule(std::nan("")), ArgumentError);
    }
}

TEST_CASE("outcome_distribution properties on random states") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const StateVector s(oracle::random_state(n, rng));
        const auto born = outcome_distribution(s, MeasurementRule::born());
        double sum = 0.0;
        for (std::size_t i = 0; i < born.size(); ++i) {
            CHECK(std::abs(born[i] - std::norm(s[i])) < 1e-12);
            sum += born[i];
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);

        const double p = 0.5 + 4.0 * rng.uniform();
        const MeasurementRule rule(p);
        const Complex factor =
            std::polar(0.01 + 50.0 * rng.uniform(), 6.0 * rng.uniform());
        const auto a = outcome_distribution(s, rule);
        const auto b = outcome_distribution(s.scaled(factor), rule);
        double total = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(std::abs(a[i] - b[i]) < 1e-12);
            total += a[i];
        }
        CHECK(std::abs(total - 1.0) < 1e-12);
    }
}

TEST_CASE("sample_outcome") {
    SUBCASE("deterministic outcome") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Rng rng(seed);
            for (double p : {0.7, 2.0, 3.0}) {
                const auto m = sample_outcome(new_basis_state(2, 1),
                                              MeasurementRule(p), rng);
                CHECK(m.outcome == 1);
                CHECK(m.post_state == new_basis_state(2, 1));
            }
        }
    }
    SUBCASE("Bell statistics") {
        Rng rng(2024);
        const auto b = bell();
        int zeros = 0;
        constexpr int shots = 100000;
        for (int i = 0; i < shots; ++i) {
            const auto m = sample_outcome(b, MeasurementRule::born(), rng);
            REQUIRE((m.outcome == 0 || m.outcome == 3));
            zeros += m.outcome == 0 ? 1 : 0;
        }
        CHECK(std::abs(zeros / double(shots) - 0.5) < 0.01);
    }
    SUBCASE("biased qubit") {
        Rng rng(77);
        const StateVector s({0.6, 0.8});
        int ones = 0;
        constexpr int shots = 100000;
        for (int i = 0; i < shots; ++i) {
            ones +=
                sample_outcome(s, MeasurementRule::born(), rng).outcome == 1;
        }
        CHECK(std::abs(ones / double(shots) - 0.64) < 0.01);
    }
    SUBCASE("subset readout renormalizes the projection") {
        Rng rng(3);
        const std::vector<int> first{0};
        const StateVector s({0.6, 0.0, 0.0, 0.8});
        const auto m = sample_outcome(s, MeasurementRule::born(), first, rng);
        const auto expected = new_basis_state(2, m.outcome == 0 ? 0 : 3);
        CHECK(m.post_state == expected);
    }
    SUBCASE("degenerate") {
        Rng rng(1);
        CHECK_THROWS_AS(
            (void)sample_outcome(StateVector(1), MeasurementRule::born(), rng),
            DegenerateStateError);
    }
}

TEST_CASE("reduced_density examples") {
    const auto g2 = qubit_grouping(2);
    const std::vector<int> first{0};

    const auto rho_bell = reduced_density(bell(), first, g2);
    CHECK(std::abs(rho_bell(0, 0) - 0.5) < 1e-12);
    CHECK(std::abs(rho_bell(1, 1) - 0.5) < 1e-12);
    CHECK(std::abs(rho_bell(0, 1)) < 1e-12);

    const auto rho_prod = reduced_density(new_basis_state(2, 1), first, g2);
    CHECK(std::abs(rho_prod(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(rho_prod(1, 1)) < 1e-12);

    // W marginal from the explicit partial trace.
    const auto w = w_state();
    const std::vector<oracle::C> w_amps(w.amplitudes().begin(),
                                        w.amplitudes().end());
    const auto expected = oracle::eig2(oracle::partial_trace(w_amps, 3, {0}));
    CHECK(std::abs(expected[0] - 2.0 / 3.0) < 1e-12);
    CHECK(std::abs(expected[1] - 1.0 / 3.0) < 1e-12);
    const auto ev =
        hermitian_eigenvalues(reduced_density(w, first, qubit_grouping(3)));
    CHECK(std::abs(ev[0] - expected[0]) < 1e-12);
    CHECK(std::abs(ev[1] - expected[1]) < 1e-12);
}

TEST_CASE("reduced_density errors") {
    const auto g2 = qubit_grouping(2);
    const std::vector<int> none;
    const std::vector<int> all{0, 1};
    CHECK_THROWS_AS((void)reduced_density(bell(), none, g2), ArgumentError);
    CHECK_THROWS_AS((void)reduced_density(bell(), all, g2), ArgumentError);
    const std::vector<int> first{0};
    CHECK_THROWS_AS((void)reduced_density(bell().scaled(2.0), first, g2),
                    ValidationError);
    CHECK_THROWS_AS((void)reduced_density(bell(), first, Grouping{{0}, {0}}),
                    ArgumentError);
}

TEST_CASE("reduced_density matches the explicit partial trace and is a state") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4));
        const auto psi = oracle::random_state(n, rng);
        const auto grouping = qubit_grouping(n);
        std::vector<int> keep;
        for (int q = 0; q < n; ++q) {
            if (rng.coin()) {
                keep.push_back(q);
            }
        }
        if (keep.empty() || static_cast<int>(keep.size()) == n) {
            continue;
        }
        const auto rho = reduced_density(StateVector(psi), keep, grouping);
        const auto expected = oracle::partial_trace(psi, n, keep);
        for (std::size_t r = 0; r < expected.size(); ++r) {
            for (std::size_t c = 0; c < expected.size(); ++c) {
                CHECK(std::abs(rho(static_cast<Eigen::Index>(r),
                                   static_cast<Eigen::Index>(c)) -
                               expected[r][c]) < 1e-12);
            }
        }
        CHECK(std::abs(rho.trace() - 1.0) < 1e-10);
        for (double ev : hermitian_eigenvalues(rho)) {
            CHECK(ev > -1e-12);
        }

        std::vector<int> rest;
        for (int q = 0; q < n; ++q) {
            if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
                rest.push_back(q);
            }
        }
        auto a = hermitian_eigenvalues(rho);
        auto b = hermitian_eigenvalues(
            reduced_density(StateVector(psi), rest, grouping));
        const std::size_t common = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < common; ++i) {
            CHECK(std::abs(a[i] - b[i]) < 1e-10);
        }
    }
}

TEST_CASE(
    "schmidt_spectrum agrees with dense eigenvalues on multi-qubit particles") {
    Rng rng(123);
    const auto psi = oracle::random_state(5, rng);
    const Grouping grouping{{0, 3}, {1}, {2, 4}};
    const std::vector<int> keep{0, 2};
    const auto rho = reduced_density(StateVector(psi), keep, grouping);
    const auto jac =
        oracle::eig_jacobi(oracle::partial_trace(psi, 5, {0, 3, 2, 4}));
    const auto ev = hermitian_eigenvalues(rho);
    REQUIRE(ev.size() == jac.size());
    for (std::size_t i = 0; i < ev.size(); ++i) {
        CHECK(std::abs(ev[i] - jac[i]) < 1e-10);
    }
    const std::vector<int> kept_qubits{0, 3, 2, 4};
    const auto spec = schmidt_spectrum(StateVector(psi), kept_qubits);
    for (std::size_t i = 0; i < ev.size(); ++i) {
        CHECK(std::abs(spec[i] - jac[i]) < 1e-10);
    }
}
