#include "qts/statevector.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qts/errors.hpp"
#include "support/oracles.hpp"

using namespace qts;

namespace {

constexpr double tol = 1e-12;
double const s2 = 1.0 / std::sqrt(2.0);

void expect_amplitudes(StateVector const& state, std::vector<Amplitude> const& expected) {
    ASSERT_EQ(state.dimension(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_NEAR(std::abs(state[i] - expected[i]), 0.0, tol) << "amplitude " << i;
    }
}

StateVector bell() {
    StateVector s(2);
    s.apply(GateOp::h(0));
    s.apply(GateOp::cx(0, 1));
    return s;
}

StateVector random_state(std::mt19937_64& gen, std::size_t n) {
    std::normal_distribution<double> normal;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& a : amps) {
        a = {normal(gen), normal(gen)};
        norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    return StateVector::from_amplitudes(std::move(amps));
}

GateOp random_gate(std::mt19937_64& gen, std::size_t n) {
    std::uniform_int_distribution<std::size_t> q(0, n - 1);
    std::uniform_int_distribution<int> k(0, 3);
    std::size_t const t = q(gen);
    switch (k(gen)) {
        case 0: return GateOp::x(t);
        case 1: return GateOp::z(t);
        case 2: return GateOp::h(t);
        default: {
            std::size_t c = q(gen);
            while (c == t) c = q(gen);
            return GateOp::cx(c, t);
        }
    }
}

}  // namespace

TEST(StateVector, ZeroState) {
    expect_amplitudes(zero_state(1), {1.0, 0.0});
    expect_amplitudes(zero_state(2), {1.0, 0.0, 0.0, 0.0});
    EXPECT_THROW(zero_state(21), SizeError);
    EXPECT_THROW(zero_state(0), SizeError);
    EXPECT_EQ(zero_state(20).dimension(), std::size_t{1} << 20);
}

TEST(StateVector, SingleQubitGates) {
    StateVector x(1);
    x.apply(GateOp::x(0));
    expect_amplitudes(x, {0.0, 1.0});

    StateVector plus(1);
    plus.apply(GateOp::h(0));
    expect_amplitudes(plus, {s2, s2});

    plus.apply(GateOp::z(0));
    expect_amplitudes(plus, {s2, -s2});
}

TEST(StateVector, BellState) { expect_amplitudes(bell(), {s2, 0.0, 0.0, s2}); }

TEST(StateVector, QubitZeroIsLeastSignificant) {
    StateVector s(3);
    s.apply(GateOp::x(0));
    s.apply(GateOp::x(2));
    EXPECT_NEAR(std::abs(s[5]), 1.0, tol);
    EXPECT_EQ(basis_label(5, 3), "101");
    EXPECT_EQ(basis_label(1, 3), "001");
}

TEST(StateVector, ConditionalGate) {
    std::vector<std::uint8_t> cbits{0, 1};
    StateVector s(1);
    s.apply(GateOp::x(0).when(0), cbits);
    expect_amplitudes(s, {1.0, 0.0});
    s.apply(GateOp::x(0).when(1), cbits);
    expect_amplitudes(s, {0.0, 1.0});
    s.apply(GateOp::x(0).when(0, 0), cbits);
    expect_amplitudes(s, {1.0, 0.0});
    EXPECT_THROW(s.apply(GateOp::x(0).when(2), cbits), IndexError);
}

TEST(StateVector, IndexErrors) {
    StateVector s(2);
    EXPECT_THROW(s.apply(GateOp::x(2)), IndexError);
    EXPECT_THROW(s.apply(GateOp::cx(0, 0)), IndexError);
    EXPECT_THROW(s.apply(GateOp::cx(3, 0)), IndexError);
    Rng rng(1);
    EXPECT_THROW(s.measure(5, rng), IndexError);
}

TEST(StateVector, FromAmplitudes) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), SizeError);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), ShapeError);
    auto s = StateVector::from_amplitudes({1.0 / std::sqrt(3.0), std::sqrt(2.0 / 3.0)});
    EXPECT_EQ(s.num_qubits(), 1U);
}

TEST(StateVector, Probabilities) {
    auto const p = StateVector::from_amplitudes({1.0 / std::sqrt(3.0), std::sqrt(2.0 / 3.0)}).probabilities();
    EXPECT_NEAR(p[0], 1.0 / 3.0, tol);
    EXPECT_NEAR(p[1], 2.0 / 3.0, tol);

    auto const b = bell().probabilities();
    EXPECT_NEAR(b[0], 0.5, tol);
    EXPECT_NEAR(b[1], 0.0, tol);
    EXPECT_NEAR(b[2], 0.0, tol);
    EXPECT_NEAR(b[3], 0.5, tol);

    auto const z = zero_state(2).probabilities();
    EXPECT_EQ(z, (std::vector<double>{1.0, 0.0, 0.0, 0.0}));
}

TEST(StateVector, MeasureBasisState) {
    Rng rng(7);
    StateVector one(1);
    one.apply_x(0);
    for (int i = 0; i < 10; ++i) {
        EXPECT_EQ(one.measure(0, rng), 1);
        expect_amplitudes(one, {0.0, 1.0});
    }
}

TEST(StateVector, BellMeasurementsAgree) {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        auto s = bell();
        int const a = s.measure(0, rng);
        int const b = s.measure(1, rng);
        EXPECT_EQ(a, b);
        EXPECT_NEAR(s.norm_squared(), 1.0, tol);
    }
}

TEST(StateVector, MeasurementFrequencyFollowsBornRule) {
    Rng rng(2024);
    auto const psi = StateVector::from_amplitudes({1.0 / std::sqrt(3.0), std::sqrt(2.0 / 3.0)});
    constexpr int draws = 100000;
    int ones = 0;
    for (int i = 0; i < draws; ++i) {
        auto copy = psi;
        ones += copy.measure(0, rng);
    }
    EXPECT_TRUE(oracle::within_binomial_3sigma(ones, draws, 2.0 / 3.0)) << ones;
}

TEST(StateVector, CollapseOfImpossibleOutcomeIsInternalError) {
    StateVector s(1);
    EXPECT_THROW(s.collapse(0, 1), InternalError);
}

TEST(StateVector, SampleCounts) {
    Rng rng(5);
    auto const bell_counts = bell().sample_counts(1000, rng);
    std::uint64_t total = 0;
    for (auto const& [k, n] : bell_counts) {
        EXPECT_TRUE(k == "00" || k == "11") << k;
        total += n;
    }
    EXPECT_EQ(total, 1000U);

    EXPECT_EQ(zero_state(1).sample_counts(37, rng), (Counts{{"0", 37}}));

    StateVector uniform(2);
    uniform.apply_h(0);
    uniform.apply_h(1);
    auto const counts = uniform.sample_counts(100000, rng);
    ASSERT_EQ(counts.size(), 4U);
    for (auto const& [k, n] : counts) EXPECT_TRUE(oracle::within_binomial_3sigma(n, 100000, 0.25)) << k << " " << n;
}

TEST(StateVector, SamplingIsDeterministicPerSeed) {
    StateVector uniform(3);
    for (std::size_t q = 0; q < 3; ++q) uniform.apply_h(q);
    Rng a(99);
    Rng b(99);
    EXPECT_EQ(uniform.sample_counts(500, a), uniform.sample_counts(500, b));
}

TEST(StateVectorProperty, NormPreservedUnderRandomCircuits) {
    std::mt19937_64 gen(1);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t const n = 2 + trial % 5;
        auto s = random_state(gen, n);
        std::uniform_int_distribution<int> len(1, 100);
        for (int g = len(gen); g > 0; --g) s.apply(random_gate(gen, n));
        EXPECT_NEAR(s.norm_squared(), 1.0, tol);
    }
}

TEST(StateVectorProperty, GatesAreInvolutions) {
    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 100; ++trial) {
        auto const original = random_state(gen, 4);
        auto const gate = random_gate(gen, 4);
        auto s = original;
        s.apply(gate);
        s.apply(gate);
        for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_NEAR(std::abs(s[i] - original[i]), 0.0, tol);
    }
}

TEST(StateVectorProperty, CnotCopiesBasisOutcome) {
    std::mt19937_64 gen(3);
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto const single = random_state(gen, 1);
        auto s = StateVector::from_amplitudes({single[0], single[1], 0.0, 0.0});
        s.apply(GateOp::cx(0, 1));
        int const a = s.measure(0, rng);
        int const b = s.measure(1, rng);
        EXPECT_EQ(a, b);
    }
}

TEST(StateVectorProperty, ProbabilitiesIgnoreGlobalPhase) {
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int trial = 0; trial < 50; ++trial) {
        auto const s = random_state(gen, 3);
        Amplitude const phase = std::polar(1.0, angle(gen));
        std::vector<Amplitude> rotated(s.amplitudes().begin(), s.amplitudes().end());
        for (auto& a : rotated) a *= phase;
        auto const p = s.probabilities();
        auto const q = StateVector::from_amplitudes(rotated).probabilities();
        for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], q[i], tol);
    }
}

TEST(StateVector, KernelsMatchMatrixOracle) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto const s = random_state(gen, 3);
        auto const g = random_gate(gen, 3);
        auto applied = s;
        applied.apply(g);
        auto const m = oracle::gate_matrix(g, 3);
        for (std::size_t r = 0; r < 8; ++r) {
            Amplitude expected{0.0, 0.0};
            for (std::size_t c = 0; c < 8; ++c) expected += m(r, c) * s[c];
            EXPECT_NEAR(std::abs(applied[r] - expected), 0.0, tol);
        }
    }
}
