#include "doctest.h"

#include <cmath>
#include <random>

#include "qcat/fit.hpp"
#include "qcat/params.hpp"

using namespace qcat;

namespace {

std::vector<double> synthetic(std::size_t n, double baseline, double amp, double gamma,
                              double t_u, double phi) {
    std::vector<double> y(n);
    for (std::size_t t = 0; t < n; ++t) {
        y[t] = baseline + amp * std::exp(-gamma * static_cast<double>(t)) *
                              std::cos(2.0 * pi * static_cast<double>(t) / t_u + phi);
    }
    return y;
}

}  // namespace

TEST_CASE("fit recovers its own generating model") {
    const auto y = synthetic(901, 0.5, 0.5, 0.002, 90.0, 0.0);
    const FitResult fit = fit_damped_cosine(y);
    REQUIRE(fit.ok());
    CHECK(std::abs(fit.t_u - 90.0) / 90.0 < 1e-6);
    CHECK(std::abs(fit.gamma - 0.002) / 0.002 < 1e-6);
    CHECK(fit.amplitude == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(fit.baseline == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(fit.rms_residual < 1e-9);
}

TEST_CASE("fit idempotence: refitting the fitted model reproduces parameters") {
    const auto y = synthetic(600, 0.48, 0.45, 0.004, 117.0, 0.3);
    const FitResult first = fit_damped_cosine(y);
    REQUIRE(first.ok());
    const auto regen =
        synthetic(600, first.baseline, first.amplitude, first.gamma, first.t_u, first.phi);
    const FitResult second = fit_damped_cosine(regen);
    REQUIRE(second.ok());
    CHECK(std::abs(second.t_u - first.t_u) / first.t_u < 1e-9);
    CHECK(std::abs(second.gamma - first.gamma) < 1e-9 * std::max(first.gamma, 1.0));
    CHECK(std::abs(second.baseline - first.baseline) < 1e-9);
}

TEST_CASE("fit under additive noise: Monte Carlo over 100 draws") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
    int t_ok = 0, g_ok = 0, all = 0;
    for (int rep = 0; rep < 100; ++rep) {
        auto y = synthetic(901, 0.5, 0.5, 0.002, 90.0, 0.0);
        for (auto& v : y) v += noise(rng);
        const FitResult fit = fit_damped_cosine(y);
        if (!fit.ok()) continue;
        ++all;
        if (std::abs(fit.t_u - 90.0) / 90.0 < 0.01) ++t_ok;
        if (std::abs(fit.gamma - 0.002) / 0.002 < 0.05) ++g_ok;
    }
    CHECK(all == 100);
    CHECK(t_ok == 100);
    CHECK(g_ok == 100);
}

TEST_CASE("fit is stable under time decimation") {
    // sampling every 2nd point changes T_u and Gamma by < 1%
    const auto y = synthetic(1201, 0.5, 0.48, 0.003, 75.0, 0.1);
    std::vector<double> decimated;
    for (std::size_t t = 0; t < y.size(); t += 2) decimated.push_back(y[t]);
    const FitResult full = fit_damped_cosine(y);
    const FitResult half = fit_damped_cosine(decimated);
    REQUIRE(full.ok());
    REQUIRE(half.ok());
    CHECK(std::abs(2.0 * half.t_u - full.t_u) / full.t_u < 0.01);
    CHECK(std::abs(half.gamma / 2.0 - full.gamma) / full.gamma < 0.01);
}

TEST_CASE("flat and featureless series report NoOscillation") {
    std::vector<double> flat(500, 0.5);
    CHECK(fit_damped_cosine(flat).status == FitStatus::NoOscillation);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e-4, 1e-4);
    std::vector<double> noise_only(500);
    for (auto& v : noise_only) v = 0.5 + u(rng);
    CHECK(fit_damped_cosine(noise_only).status == FitStatus::NoOscillation);
}

TEST_CASE("too-short series reports InsufficientData") {
    std::vector<double> tiny(4, 0.5);
    CHECK(fit_damped_cosine(tiny).status == FitStatus::InsufficientData);
}

TEST_CASE("frozen gamma fits a pure cosine") {
    const auto y = synthetic(400, 0.5, 0.5, 0.0, 90.0, 0.0);
    FitOptions opts;
    opts.freeze_gamma = true;
    const FitResult fit = fit_damped_cosine(y, opts);
    REQUIRE(fit.ok());
    CHECK(fit.gamma == 0.0);
    CHECK(std::abs(fit.t_u - 90.0) / 90.0 < 1e-8);
}

TEST_CASE("t_u_init override bypasses the spectral guess") {
    // heavily damped: less than a third of a period before the signal dies
    const auto y = synthetic(600, 0.5, 0.45, 0.02, 800.0, 0.0);
    FitOptions opts;
    opts.t_u_init = 800.0;
    const FitResult fit = fit_damped_cosine(y, opts);
    REQUIRE(fit.ok());
    CHECK(std::abs(fit.gamma - 0.02) / 0.02 < 0.02);
}

TEST_CASE("scaling regression on exact power-law records") {
    std::vector<SweepRecord> records;
    for (int n_q : {6, 7, 8}) {
        for (double eps : {0.005, 0.01, 0.02}) {
            SweepRecord r;
            r.n_q = n_q;
            r.epsilon = eps;
            r.gamma = 0.021 * eps * eps * std::pow(n_q, 4.0);
            records.push_back(r);
        }
    }
    const ScalingResult res = fit_scaling(records);
    CHECK(std::abs(res.exponent_eps - 2.0) < 1e-9);
    CHECK(std::abs(res.exponent_nq - 4.0) < 1e-9);
    CHECK(std::abs(res.prefactor - 0.021) < 1e-9);
}

TEST_CASE("scaling regression refuses insufficient spread") {
    std::vector<SweepRecord> records;
    for (double eps : {0.005, 0.01}) {  // only two epsilon values
        for (int n_q : {6, 7}) {
            SweepRecord r;
            r.n_q = n_q;
            r.epsilon = eps;
            r.gamma = 1e-3;
            records.push_back(r);
        }
    }
    CHECK_THROWS_AS(fit_scaling(records), std::invalid_argument);
}

TEST_CASE("scaling regression skips failed and zero-gamma rows") {
    std::vector<SweepRecord> records;
    for (int n_q : {6, 7, 8}) {
        for (double eps : {0.005, 0.01, 0.02}) {
            SweepRecord r;
            r.n_q = n_q;
            r.epsilon = eps;
            r.gamma = 0.021 * eps * eps * std::pow(n_q, 4.0);
            records.push_back(r);
        }
    }
    SweepRecord bad;
    bad.n_q = 9;
    bad.epsilon = 0.04;
    bad.gamma = 1.0;  // would wreck the fit if included
    bad.status = FitStatus::NonConvergence;
    records.push_back(bad);
    SweepRecord zero;
    zero.n_q = 9;
    zero.epsilon = 0.0;
    zero.gamma = 0.0;
    records.push_back(zero);

    const ScalingResult res = fit_scaling(records);
    CHECK(std::abs(res.exponent_eps - 2.0) < 1e-9);
    CHECK(std::abs(res.exponent_nq - 4.0) < 1e-9);
}
