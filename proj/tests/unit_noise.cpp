#include "doctest.h"

#include <cmath>
#include <random>

#include "qcat/noise.hpp"
#include "qcat/oracle.hpp"
#include "qcat/rng.hpp"

using namespace qcat;

TEST_CASE("jitter is zero at epsilon = 0") {
    NoiseModel model;
    model.epsilon = 0.0;
    model.seed = 7;
    for (uint64_t t = 0; t < 100; ++t) CHECK(sample_jitter(model, t, t * 3) == 0.0);
}

TEST_CASE("jitter bounds and mean over many samples") {
    NoiseModel model;
    model.epsilon = 0.02;
    model.seed = 12345;
    double sum = 0.0;
    const std::size_t n = 1000000;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = sample_jitter(model, i / 1000, i % 1000);
        REQUIRE(std::abs(d) < 0.01);
        sum += d;
    }
    // uniform(-0.01, 0.01): sigma_mean = 0.01/sqrt(3 n)
    CHECK(std::abs(sum / static_cast<double>(n)) < 3.0 * 0.01 / std::sqrt(3.0 * n));
}

TEST_CASE("jitter streams are keyed, not sequential") {
    NoiseModel model;
    model.epsilon = 0.02;
    model.seed = 9;
    model.realization_id = 4;
    // same key twice gives the same draw; different keys differ
    CHECK(sample_jitter(model, 17, 120) == sample_jitter(model, 17, 120));
    CHECK(sample_jitter(model, 17, 120) != sample_jitter(model, 17, 121));
    CHECK(sample_jitter(model, 17, 120) != sample_jitter(model, 18, 120));
    NoiseModel other = model;
    other.realization_id = 5;
    CHECK(sample_jitter(model, 17, 120) != sample_jitter(other, 17, 120));
}

TEST_CASE("epsilon = 0 noisy iteration is bitwise identical to the exact circuit") {
    MapParams params(0.04, 1.6, 6);
    const Circuit c = compile_map(params);
    StateVector noisy = init_coherent(params, -params.a, 0.0);
    StateVector exact = noisy;
    NoiseModel model;
    model.epsilon = 0.0;
    for (int t = 0; t < 5; ++t) {
        noisy_iterate(noisy, c, model, t);
        apply_circuit(exact, c);
    }
    for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(noisy.amp[i].real() == exact.amp[i].real());
        CHECK(noisy.amp[i].imag() == exact.amp[i].imag());
    }
}

TEST_CASE("noisy evolution stays normalized") {
    MapParams params(0.04, 1.6, 6);
    const Circuit c = compile_map(params);
    StateVector s = init_coherent(params, -params.a, 0.0);
    NoiseModel model;
    model.epsilon = 0.3;  // strong noise, unitarity must still hold
    model.seed = 3;
    for (int t = 0; t < 20; ++t) noisy_iterate(s, c, model, t);
    CHECK(s.norm2() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm drift below 1e-8 over a million noisy gates") {
    MapParams params(0.04, 1.6, 6);
    const Circuit c = compile_map(params);  // 2065 gates per iteration
    StateVector s = init_coherent(params, -params.a, 0.0);
    NoiseModel model;
    model.epsilon = 0.02;
    model.seed = 11;
    const int iterations = static_cast<int>(1000000 / c.counts.total) + 1;
    for (int t = 0; t < iterations; ++t) noisy_iterate(s, c, model, t);
    CHECK(std::abs(s.norm2() - 1.0) < 1e-8);
}

TEST_CASE("same seed reproduces the same noisy trajectory") {
    MapParams params(0.04, 1.6, 6);
    const Circuit c = compile_map(params);
    NoiseModel model;
    model.epsilon = 0.02;
    model.seed = 42;
    StateVector s1 = init_step(params);
    StateVector s2 = init_step(params);
    for (int t = 0; t < 10; ++t) {
        noisy_iterate(s1, c, model, t);
        noisy_iterate(s2, c, model, t);
    }
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1.amp[i] == s2.amp[i]);
}

TEST_CASE("work-qubit exemption leaves those gates ideal") {
    MapParams params(0.04, 1.6, 6);
    // a circuit made only of work-qubit gates evolves identically under
    // exempted noise and under no noise
    Circuit c;
    c.params = params;
    const int w = params.n_q - 1;
    c.gates.push_back(make_toffoli(0, 1, w));
    c.gates.push_back(make_phase_subset({w, 2, 3}, 0.7));
    c.gates.push_back(make_toffoli(0, 1, w));
    c.kick_end = c.qft_end = c.kinetic_end = c.gates.size();

    NoiseModel exempt;
    exempt.epsilon = 0.5;
    exempt.seed = 5;
    exempt.exempt_work_qubit = true;

    StateVector noisy = init_coherent(params, -params.a, 0.0);
    StateVector exact = noisy;
    noisy_iterate(noisy, c, exempt, 0);
    apply_circuit(exact, c);
    for (std::size_t i = 0; i < exact.size(); ++i) CHECK(noisy.amp[i] == exact.amp[i]);
}

TEST_CASE("phase-only jitter leaves Hadamard and Toffoli ideal") {
    MapParams params(0.04, 1.6, 6);
    Circuit c;
    c.params = params;
    c.gates.push_back(make_hadamard(0));
    c.gates.push_back(make_toffoli(1, 2, 3));
    c.kick_end = c.qft_end = c.kinetic_end = c.gates.size();

    NoiseModel model;
    model.epsilon = 0.5;
    model.seed = 8;
    model.phase_gates_only = true;

    StateVector noisy = init_coherent(params, -params.a, 0.0);
    StateVector exact = noisy;
    noisy_iterate(noisy, c, model, 0);
    apply_circuit(exact, c);
    for (std::size_t i = 0; i < exact.size(); ++i) CHECK(noisy.amp[i] == exact.amp[i]);
}

TEST_CASE("halving epsilon quarters the single-iteration infidelity") {
    MapParams params(0.04, 1.6, 6);
    const Circuit c = compile_map(params);
    const StateVector start = init_coherent(params, -params.a, 0.0);

    auto mean_infidelity = [&](double eps) {
        double total = 0.0;
        const int reps = 24;
        for (int r = 0; r < reps; ++r) {
            NoiseModel model;
            model.epsilon = eps;
            model.seed = 1000;
            model.realization_id = static_cast<uint64_t>(r);
            StateVector noisy = start;
            StateVector exact = start;
            noisy_iterate(noisy, c, model, 0);
            apply_circuit(exact, c);
            total += 1.0 - std::norm(overlap(exact, noisy));
        }
        return total / reps;
    };

    const double i1 = mean_infidelity(0.02);
    const double i2 = mean_infidelity(0.01);
    const double ratio = i1 / i2;  // expect 4 within +-30%
    CHECK(ratio > 4.0 * 0.7);
    CHECK(ratio < 4.0 * 1.3);
}
