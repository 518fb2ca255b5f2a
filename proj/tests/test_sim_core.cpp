// Copyright 2026 The qrelief authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "oracle.hpp"
#include "qrelief/errors.hpp"
#include "qrelief/gate.hpp"
#include "qrelief/rng.hpp"
#include "qrelief/state.hpp"

using qrelief::ConfigError;
using qrelief::ImpossiblePostselectionError;
using qrelief::sim::Amplitude;
using qrelief::sim::Gate;
using qrelief::sim::QuantumState;
using qrelief::sim::Register;
using qrelief::sim::Rng;
using qrelief::sim::ShotCounts;

namespace {

constexpr double kTol = 1e-10;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_amplitudes_close(const QuantumState& state,
                            const std::vector<Amplitude>& expected,
                            double tol = kTol) {
    REQUIRE(state.dimension() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CAPTURE(k);
        CHECK(std::abs(state.amplitude(k) - expected[k]) < tol);
    }
}

}  // namespace

TEST_CASE("basis state construction puts the single amplitude where the bits say") {
    SUBCASE("multi-register layout, mixed bits") {
        QuantumState s({{"s", 2}, {"f", 2}, {"flag", 1}, {"amp", 1}}, "000010");
        CHECK(s.num_qubits() == 6);
        for (std::size_t k = 0; k < s.dimension(); ++k) {
            CHECK(std::abs(s.amplitude(k) - (k == 0b000010 ? 1.0 : 0.0)) == 0.0);
        }
    }
    SUBCASE("single qubit ground state") {
        QuantumState s({{"q", 1}}, "0");
        CHECK(s.amplitude(0) == Amplitude{1.0, 0.0});
        CHECK(s.amplitude(1) == Amplitude{0.0, 0.0});
    }
    SUBCASE("two-qubit |11>") {
        QuantumState s({{"q", 2}}, "11");
        CHECK(s.amplitude(3) == Amplitude{1.0, 0.0});
    }
    SUBCASE("bitstring length must match the layout width") {
        CHECK_THROWS_AS(QuantumState({{"q", 2}}, "101"), ConfigError);
        CHECK_THROWS_AS(QuantumState({{"q", 2}}, "2x"), ConfigError);
    }
}

TEST_CASE("elementary gates act as defined") {
    SUBCASE("H on |0>") {
        QuantumState s({{"q", 1}}, "0");
        s.apply(Gate::h(0));
        check_amplitudes_close(s, {kInvSqrt2, kInvSqrt2});
    }
    SUBCASE("Ry(pi) maps |0> to |1>") {
        QuantumState s({{"q", 1}}, "0");
        s.apply(Gate::ry(std::numbers::pi, 0));
        check_amplitudes_close(s, {0.0, 1.0});
    }
    SUBCASE("SWAP exchanges |01> and |10>") {
        QuantumState s({{"q", 2}}, "01");
        s.apply(Gate::swap(0, 1));
        check_amplitudes_close(s, {0.0, 0.0, 1.0, 0.0});
    }
    SUBCASE("X and Y on |0>") {
        QuantumState sx({{"q", 1}}, "0");
        sx.apply(Gate::x(0));
        check_amplitudes_close(sx, {0.0, 1.0});
        QuantumState sy({{"q", 1}}, "0");
        sy.apply(Gate::y(0));
        check_amplitudes_close(sy, {0.0, Amplitude{0.0, 1.0}});
    }
    SUBCASE("zero-polarity control fires on |0>") {
        QuantumState s({{"q", 2}}, "00");
        s.apply(Gate::x(1).controlled_by(0, 0));
        check_amplitudes_close(s, {0.0, 1.0, 0.0, 0.0});
        s.apply(Gate::x(1).controlled_by(0, 1));  // control not met, no-op
        check_amplitudes_close(s, {0.0, 1.0, 0.0, 0.0});
    }
    SUBCASE("out-of-range target is rejected") {
        QuantumState s({{"q", 1}}, "0");
        CHECK_THROWS_AS(s.apply(Gate::x(1)), ConfigError);
        CHECK_THROWS_AS(s.apply(Gate::x(0).controlled_by(0)), ConfigError);
    }
    SUBCASE("non-unitary matrix is rejected") {
        CHECK_THROWS_AS(Gate::unitary({1.0, 1.0, 0.0, 1.0}, 0), ConfigError);
    }
}

TEST_CASE("gate application matches the dense matrix oracle") {
    Rng rng(20260501);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4));  // 2..5 qubits
        QuantumState state = QuantumState::from_amplitudes(
            {{"q", n}}, oracle::random_state(n, rng));
        std::vector<oracle::Amp> reference = state.amplitudes();

        for (int step = 0; step < 6; ++step) {
            const int target = static_cast<int>(rng.below(n));
            Gate g = [&]() {
                switch (rng.below(6)) {
                    case 0: return Gate::h(target);
                    case 1: return Gate::x(target);
                    case 2: return Gate::y(target);
                    case 3: return Gate::ry(rng.next_unit() * 6.0, target);
                    case 4: {
                        // arbitrary unitary from three angles
                        const double theta = rng.next_unit() * 6.0;
                        const double alpha = rng.next_unit() * 6.0;
                        const double beta = rng.next_unit() * 6.0;
                        const double c = std::cos(theta);
                        const double s = std::sin(theta);
                        return Gate::unitary(
                            {c * std::polar(1.0, alpha), -s * std::polar(1.0, beta),
                             s * std::polar(1.0, -beta), c * std::polar(1.0, -alpha)},
                            target);
                    }
                    default: {
                        const int other = static_cast<int>((target + 1 + rng.below(n - 1)) % n);
                        return Gate::swap(target, other);
                    }
                }
            }();
            // sprinkle in controls on qubits the gate does not touch
            for (int q = 0; q < n; ++q) {
                bool used = q == target;
                for (int t : g.targets()) {
                    used = used || q == t;
                }
                if (!used && rng.bernoulli(0.3)) {
                    g = g.controlled_by(q, static_cast<int>(rng.below(2)));
                }
            }
            state.apply(g);
            reference = oracle::mat_vec(oracle::gate_matrix(g, n), reference);
        }

        for (std::size_t k = 0; k < reference.size(); ++k) {
            CAPTURE(trial);
            CAPTURE(k);
            REQUIRE(std::abs(state.amplitude(k) - reference[k]) < kTol);
        }
        CHECK(std::abs(state.norm_squared() - 1.0) < kTol);
    }
}

TEST_CASE("H and SWAP are involutions") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        QuantumState state = QuantumState::from_amplitudes(
            {{"q", 3}}, oracle::random_state(3, rng));
        const std::vector<Amplitude> before = state.amplitudes();
        state.apply(Gate::h(1));
        state.apply(Gate::h(1));
        state.apply(Gate::swap(0, 2));
        state.apply(Gate::swap(0, 2));
        for (std::size_t k = 0; k < before.size(); ++k) {
            CHECK(std::abs(state.amplitude(k) - before[k]) < kTol);
        }
    }
}

TEST_CASE("measurement probabilities") {
    SUBCASE("uniform superposition gives 1/2") {
        QuantumState s({{"q", 1}}, "0");
        s.apply(Gate::h(0));
        CHECK(s.probability(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("basis state |1> is certain") {
        QuantumState s({{"q", 1}}, "1");
        CHECK(s.probability(0, 1) == 1.0);
        CHECK(s.probability(0, 0) == 0.0);
    }
    SUBCASE("outcomes sum to one on random states") {
        Rng rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            QuantumState s = QuantumState::from_amplitudes(
                {{"q", 4}}, oracle::random_state(4, rng));
            for (int q = 0; q < 4; ++q) {
                CHECK(std::abs(s.probability(q, 0) + s.probability(q, 1) - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("shot sampling") {
    SUBCASE("certain outcomes") {
        Rng rng(1);
        QuantumState one({{"q", 1}}, "1");
        CHECK(one.sample(0, 100, rng).ones == 100);
        QuantumState zero({{"q", 1}}, "0");
        CHECK(zero.sample(0, 100, rng).ones == 0);
    }
    SUBCASE("zero shots is a configuration error") {
        Rng rng(1);
        QuantumState s({{"q", 1}}, "0");
        CHECK_THROWS_AS(s.sample(0, 0, rng), ConfigError);
    }
    SUBCASE("estimates concentrate at 3 sigma") {
        const double p = 0.46875;
        QuantumState s = QuantumState::from_amplitudes(
            {{"q", 1}}, {std::sqrt(1.0 - p), std::sqrt(p)});
        for (std::uint64_t shots : {std::uint64_t{1024}, std::uint64_t{8192}}) {
            Rng rng(20260502);
            const ShotCounts counts = s.sample(0, shots, rng);
            const double estimate = static_cast<double>(counts.ones) / shots;
            const double bound = 3.0 * std::sqrt(p * (1.0 - p) / shots);
            CHECK(std::abs(estimate - p) < bound);
        }
    }
    SUBCASE("same seed, same counts") {
        QuantumState s({{"q", 1}}, "0");
        s.apply(Gate::h(0));
        Rng a(42);
        Rng b(42);
        const ShotCounts ca = s.sample(0, 4096, a);
        const ShotCounts cb = s.sample(0, 4096, b);
        CHECK(ca.ones == cb.ones);
        CHECK(ca.zeros == cb.zeros);
    }
}

TEST_CASE("postselection") {
    SUBCASE("Bell state collapses to |00>") {
        QuantumState s({{"q", 2}}, "00");
        s.apply(Gate::h(0));
        s.apply(Gate::x(1).controlled_by(0));
        const double p = s.postselect(0, 0);
        CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
        check_amplitudes_close(s, {1.0, 0.0, 0.0, 0.0});
    }
    SUBCASE("impossible outcome throws") {
        QuantumState s({{"q", 1}}, "1");
        CHECK_THROWS_AS(s.postselect(0, 0), ImpossiblePostselectionError);
    }
    SUBCASE("norm is restored after the collapse") {
        Rng rng(5);
        QuantumState s = QuantumState::from_amplitudes(
            {{"q", 3}}, oracle::random_state(3, rng));
        s.postselect(1, 1);
        CHECK(std::abs(s.norm_squared() - 1.0) < kTol);
    }
}

TEST_CASE("overlap") {
    SUBCASE("normalized state with itself") {
        Rng rng(11);
        QuantumState s = QuantumState::from_amplitudes(
            {{"q", 3}}, oracle::random_state(3, rng));
        CHECK(std::abs(overlap(s, s) - Amplitude{1.0, 0.0}) < kTol);
    }
    SUBCASE("orthogonal basis states") {
        QuantumState a({{"q", 1}}, "0");
        QuantumState b({{"q", 1}}, "1");
        CHECK(overlap(a, b) == Amplitude{0.0, 0.0});
    }
    SUBCASE("conjugate symmetry holds exactly") {
        Rng rng(12);
        for (int trial = 0; trial < 10; ++trial) {
            QuantumState a = QuantumState::from_amplitudes(
                {{"q", 3}}, oracle::random_state(3, rng));
            QuantumState b = QuantumState::from_amplitudes(
                {{"q", 3}}, oracle::random_state(3, rng));
            CHECK(overlap(a, b) == std::conj(overlap(b, a)));
        }
    }
    SUBCASE("layout mismatch is rejected") {
        QuantumState a({{"q", 2}}, "00");
        QuantumState b({{"r", 2}}, "00");
        CHECK_THROWS_AS(overlap(a, b), ConfigError);
    }
}

TEST_CASE("norm stays within 1e-10 across long random circuits") {
    Rng rng(2026);
    QuantumState state = QuantumState::from_amplitudes(
        {{"q", 5}}, oracle::random_state(5, rng));
    for (int step = 0; step < 500; ++step) {
        const int t = static_cast<int>(rng.below(5));
        switch (rng.below(4)) {
            case 0: state.apply(Gate::h(t)); break;
            case 1: state.apply(Gate::y(t)); break;
            case 2: state.apply(Gate::ry(rng.next_unit() * 6.0, t)); break;
            default: state.apply(Gate::swap(t, static_cast<int>((t + 1) % 5))); break;
        }
        REQUIRE(std::isfinite(state.amplitude(step % 32).real()));
    }
    CHECK(std::abs(state.norm_squared() - 1.0) < kTol);
    CHECK(state.ops_applied() == 500);
}

TEST_CASE("tensor products and register bookkeeping") {
    SUBCASE("tensor concatenates layouts, first factor most significant") {
        QuantumState a({{"a", 1}}, "1");
        QuantumState b({{"b", 2}}, "01");
        QuantumState ab = tensor(a, b);
        CHECK(ab.num_qubits() == 3);
        CHECK(ab.register_offset("a") == 0);
        CHECK(ab.register_offset("b") == 1);
        check_amplitudes_close(ab, {0, 0, 0, 0, 0, 1.0, 0, 0});
    }
    SUBCASE("duplicate register names are rejected") {
        QuantumState a({{"r", 1}}, "0");
        QuantumState b({{"r", 1}}, "0");
        CHECK_THROWS_AS(tensor(a, b), ConfigError);
    }
    SUBCASE("dropping a definite register keeps the rest") {
        QuantumState a({{"keep", 1}}, "0");
        a.apply(Gate::h(0));
        QuantumState ab = tensor(a, QuantumState({{"drop", 2}}, "10"));
        QuantumState reduced = drop_register(ab, "drop");
        CHECK(reduced.num_qubits() == 1);
        check_amplitudes_close(reduced, {kInvSqrt2, kInvSqrt2});
    }
    SUBCASE("dropping an entangled register is rejected") {
        QuantumState s({{"a", 1}, {"b", 1}}, "00");
        s.apply(Gate::h(0));
        s.apply(Gate::x(1).controlled_by(0));
        CHECK_THROWS_AS(drop_register(s, "b"), ConfigError);
    }
    SUBCASE("from_amplitudes rejects unnormalized data") {
        CHECK_THROWS_AS(QuantumState::from_amplitudes({{"q", 1}}, {0.5, 0.5}),
                        ConfigError);
    }
}

TEST_CASE("rng basics") {
    SUBCASE("same seed, same stream") {
        Rng a(123);
        Rng b(123);
        for (int i = 0; i < 100; ++i) {
            CHECK(a.next_u64() == b.next_u64());
        }
    }
    SUBCASE("below covers its range") {
        Rng rng(9);
        for (int i = 0; i < 1000; ++i) {
            CHECK(rng.below(7) < 7);
        }
        CHECK_THROWS_AS(rng.below(0), ConfigError);
    }
}
