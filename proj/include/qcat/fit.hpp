#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qcat {

enum class FitStatus { Ok, NoOscillation, NonConvergence, InsufficientData };

std::string to_string(FitStatus s);

// Converged parameters of W_a(t) = baseline + A*exp(-Gamma*t)*cos(2*pi*t/T_u + phi).
struct FitResult {
    FitStatus status = FitStatus::Ok;
    double t_u = 0.0;
    double gamma = 0.0;
    double amplitude = 0.0;
    double phi = 0.0;
    double baseline = 0.0;
    double rms_residual = 0.0;
    std::size_t iterations = 0;

    bool ok() const { return status == FitStatus::Ok; }
};

struct FitOptions {
    bool freeze_gamma = false;        // period scans: pure cosine, Gamma pinned at 0
    std::optional<double> t_u_init;   // override the spectral-peak initial guess
    std::size_t max_iterations = 200;
    // Samples where the fitted envelope falls below 2x the residual floor get
    // down-weighted so noise-dominated tails cannot bias Gamma.
    bool tail_downweight = true;
};

// Levenberg-Marquardt fit of the damped cosine to uniformly sampled series
// values y[t], t = 0..n-1. Initial guesses: baseline from the mean, T_u from
// the dominant peak of the detrended spectrum (parabolic refinement), Gamma
// from the envelope of successive extrema, A from the first extremum, phi 0.
// Returns NoOscillation when no spectral peak clears 5x the median magnitude.
FitResult fit_damped_cosine(const std::vector<double>& series, const FitOptions& options = {});

// One row of the Gamma(epsilon, n_q) study.
struct SweepRecord {
    int n_q = 0;
    double K = 0.0;
    double a = 0.0;
    double epsilon = 0.0;
    uint64_t seed = 0;
    int realizations = 0;
    double t_u = 0.0;
    double gamma = 0.0;
    double rms_residual = 0.0;
    FitStatus status = FitStatus::Ok;
};

struct ScalingResult {
    double exponent_eps = 0.0;  // expected 2
    double exponent_nq = 0.0;   // expected 4
    double prefactor = 0.0;     // expected 0.021
    double stderr_eps = 0.0;
    double stderr_nq = 0.0;
    double stderr_log_prefactor = 0.0;
};

// log Gamma regressed on log epsilon and log n_q over all rows with
// status Ok, epsilon > 0 and gamma > 0. Throws std::invalid_argument
// unless >= 3 distinct epsilon and >= 2 distinct n_q survive.
ScalingResult fit_scaling(const std::vector<SweepRecord>& records);

}  // namespace qcat
