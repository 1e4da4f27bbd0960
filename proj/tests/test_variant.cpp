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
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "qsim/error.hpp"
#include "qsim/gates.hpp"
#include "qsim/variant.hpp"

using namespace qsim;
using variant::NonlinearMode;

namespace {

const double r = 1.0 / std::numbers::sqrt2;

/// Two-qubit block state from (control, flag) basis labels: 0=00 .. 3=11.
StateVector pattern(int a, int b) {
    std::vector<Complex> amps(4, 0.0);
    amps[static_cast<std::size_t>(a)] = r;
    amps[static_cast<std::size_t>(b)] = r;
    return StateVector(amps);
}

void check_equal(const StateVector &got, const StateVector &expected,
                 double tol = 1e-15) {
    REQUIRE(got.dimension() == expected.dimension());
    for (std::size_t i = 0; i < got.dimension(); ++i) {
        CHECK(std::abs(got[i] - expected[i]) <= tol);
    }
}

StateVector flip(const StateVector &s, int qubit) {
    const std::array<int, 1> q{qubit};
    return apply_local_unitary(s, q, pauli_x());
}

} // namespace

TEST_CASE("nonlinear OR reproduces its truth table") {
    // |00>+|11>, |01>+|10>, |01>+|11>  ->  |01>+|11>
    for (auto [a, b] : {std::pair{0, 3}, {1, 2}, {1, 3}}) {
        check_equal(
            variant::nonlinear_gate(pattern(a, b), 0, 1, NonlinearMode::Or),
            pattern(1, 3));
    }
    // |00>+|10> is left alone.
    check_equal(variant::nonlinear_gate(pattern(0, 2), 0, 1, NonlinearMode::Or),
                pattern(0, 2));
}

TEST_CASE("nonlinear AND reproduces its truth table") {
    for (auto [a, b] : {std::pair{0, 2}, {0, 3}, {1, 2}}) {
        check_equal(
            variant::nonlinear_gate(pattern(a, b), 0, 1, NonlinearMode::And),
            pattern(0, 2));
    }
    check_equal(
        variant::nonlinear_gate(pattern(1, 3), 0, 1, NonlinearMode::And),
        pattern(1, 3));
}

TEST_CASE("nonlinear OR disentangles the flag of (|0>|1> + |1>|0>)/sqrt2") {
    const auto out =
        variant::nonlinear_gate(pattern(1, 2), 0, 1, NonlinearMode::Or);
    // ((|0> + |1>)/sqrt2) (x) |1>
    check_equal(out, StateVector({0.0, r, 0.0, r}));
}

TEST_CASE("OR and AND are exchanged by conjugating the flag with X") {
    const std::array<std::pair<int, int>, 4> or_patterns{
        {{0, 3}, {1, 2}, {1, 3}, {0, 2}}};
    for (auto [a, b] : or_patterns) {
        const auto in = pattern(a, b);
        const auto via_or = flip(
            variant::nonlinear_gate(flip(in, 1), 0, 1, NonlinearMode::Or), 1);
        const auto direct =
            variant::nonlinear_gate(in, 0, 1, NonlinearMode::And);
        CHECK(via_or == direct);
    }
}

TEST_CASE("nonlinear_gate argument checks") {
    CHECK_THROWS_AS(
        (void)variant::nonlinear_gate(pattern(0, 3), 1, 1, NonlinearMode::Or),
        ArgumentError);
    CHECK_THROWS_AS((void)variant::nonlinear_gate(pattern(0, 3).scaled(2.0), 0,
                                                  1, NonlinearMode::Or),
                    ValidationError);
}

TEST_CASE("nonlinear_gate preserves the norm and is context-local") {
    Rng rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(6));
        const StateVector s(oracle::random_state(n, rng));
        const int control =
            static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int flag = control;
        while (flag == control) {
            flag = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        }
        const auto mode = rng.coin() ? NonlinearMode::Or : NonlinearMode::And;
        const auto out = variant::nonlinear_gate(s, control, flag, mode);
        CHECK(std::abs(out.squared_norm() - 1.0) < 1e-12);

        // Each block is processed independently: block norms are unchanged.
        const std::size_t mc = s.mask(control);
        const std::size_t mf = s.mask(flag);
        for (std::size_t base = 0; base < s.dimension(); ++base) {
            if ((base & (mc | mf)) != 0) {
                continue;
            }
            double before = 0.0;
            double after = 0.0;
            for (std::size_t k : {base, base | mf, base | mc, base | mc | mf}) {
                before += std::norm(s[k]);
                after += std::norm(out[k]);
            }
            CHECK(std::abs(before - after) < 1e-14);
        }
    }
}

TEST_CASE("nonlinear_count adds branch counters") {
    // (|0>|01> + |1>|01>)/sqrt2 -> (|0> + |1>)/sqrt2 (x) |10>
    std::vector<Complex> amps(8, 0.0);
    amps[0b001] = r;
    amps[0b101] = r;
    const std::array<int, 2> counter{1, 2};
    const auto out = variant::nonlinear_count(StateVector(amps), 0, counter);
    std::vector<Complex> expected(8, 0.0);
    expected[0b010] = r;
    expected[0b110] = r;
    check_equal(out, StateVector(expected));
}

TEST_CASE("nonlinear_count with all-zero counters equalizes amplitudes") {
    std::vector<Complex> amps(8, 0.0);
    amps[0b000] = 0.6;
    amps[0b100] = 0.8;
    const std::array<int, 2> counter{1, 2};
    const auto out = variant::nonlinear_count(StateVector(amps), 0, counter);
    std::vector<Complex> expected(8, 0.0);
    expected[0b000] = r;
    expected[0b100] = r;
    check_equal(out, StateVector(expected), 1e-15);
}

TEST_CASE("nonlinear_count treats an absent branch as zero") {
    std::vector<Complex> amps(8, 0.0);
    amps[0b011] = 1.0; // control=0 branch empty, control=1 branch holds 3
    const std::array<int, 2> counter{1, 2};
    const auto out = variant::nonlinear_count(StateVector(amps), 0, counter);
    CHECK(std::abs(out[0b011] - r) < 1e-15);
    CHECK(std::abs(out[0b111] - r) < 1e-15);
}

TEST_CASE("nonlinear_count errors") {
    const std::array<int, 2> counter{1, 2};
    SUBCASE("overflow") {
        std::vector<Complex> amps(8, 0.0);
        amps[0b011] = r;
        amps[0b111] = r; // 3 + 3 does not fit in 2 bits
        CHECK_THROWS_AS(
            (void)variant::nonlinear_count(StateVector(amps), 0, counter),
            OverflowError);
    }
    SUBCASE("ambiguous branch") {
        std::vector<Complex> amps(8, 0.0);
        amps[0b001] = r;
        amps[0b010] = r;
        CHECK_THROWS_AS(
            (void)variant::nonlinear_count(StateVector(amps), 0, counter),
            InstabilityError);
    }
    SUBCASE("control inside counter") {
        const std::array<int, 2> bad{0, 2};
        CHECK_THROWS_AS(
            (void)variant::nonlinear_count(new_basis_state(3, 0), 0, bad),
            ArgumentError);
    }
}

TEST_CASE("apply_g scales flag-0 amplitudes") {
    const auto g0 = variant::apply_g(new_basis_state(1, 0), 0, 1);
    CHECK(g0[0] == Complex(0.25));
    CHECK(g0[1] == Complex(0.0));
    CHECK(variant::apply_g(new_basis_state(1, 1), 0, 1) ==
          new_basis_state(1, 1));

    const auto out = variant::apply_g(pattern(1, 2), 0, 1);
    CHECK(out[1] == Complex(0.25 * r)); // |01>: first qubit is 0
    CHECK(out[2] == Complex(r));
    CHECK_THROWS_AS((void)variant::apply_g(pattern(1, 2), 0, 0), ArgumentError);
}

TEST_CASE("apply_g is inverted by apply_g_inverse") {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const StateVector s(oracle::random_state(n, rng));
        const int flag =
            static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int scale = 1 + static_cast<int>(rng.below(8));
        const auto back = variant::apply_g_inverse(
            variant::apply_g(s, flag, scale), flag, scale);
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            CHECK(std::abs(back[i] - s[i]) <= 1e-10 * std::abs(s[i]) + 1e-300);
        }
    }
}

TEST_CASE("signaling experiment") {
    const auto one = variant::signaling_experiment(1);
    CHECK(std::abs(one.p_bob_zero_given_G - 16.0 / 17.0) < 1e-12);
    const auto three = variant::signaling_experiment(3);
    CHECK(std::abs(three.p_bob_zero_given_G -
                   1.0 / (1.0 + std::ldexp(1.0, -12))) < 1e-12);
    CHECK(three.p_bob_zero_given_G == doctest::Approx(0.999756).epsilon(1e-6));
    for (int n = 1; n <= 8; ++n) {
        const auto s = variant::signaling_experiment(n);
        CHECK(s.p_bob_one_given_XGX == s.p_bob_zero_given_G);
    }
    CHECK_THROWS_AS((void)variant::signaling_experiment(0), ArgumentError);
}
