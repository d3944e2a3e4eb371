#pragma once

#include <cstdint>
#include <vector>

#include "qcat/circuit.hpp"
#include "qcat/fit.hpp"
#include "qcat/noise.hpp"
#include "qcat/params.hpp"

namespace qcat {

// Ensemble drivers and the two parameter studies: Gamma(epsilon, n_q) and
// the tunneling-period growth with 1/hbar.

enum class InitialState { Coherent, Step };

StateVector make_initial_state(const MapParams& params, InitialState kind);

// w_a(t), t = 0..iterations, circuit path with noise; realizations averaged
// in realization_id order (deterministic bytes for fixed seed).
std::vector<double> ensemble_wa_series(const Circuit& circuit, const NoiseModel& base_model,
                                       int realizations, std::size_t iterations,
                                       InitialState init = InitialState::Coherent,
                                       bool parallel = true);

// Per-realization series, for significance tests across realizations.
std::vector<std::vector<double>> per_realization_wa_series(const Circuit& circuit,
                                                           const NoiseModel& base_model,
                                                           int realizations,
                                                           std::size_t iterations,
                                                           InitialState init = InitialState::Coherent,
                                                           bool parallel = true);

struct SweepCell {
    int n_q = 0;
    double K = 0.0;
    double a = 0.0;
    double epsilon = 0.0;
};

struct SweepOptions {
    uint64_t seed = 1;
    int realizations = 16;
    bool exempt_work_qubit = false;
    InitialState init = InitialState::Coherent;
    // Run length: about four decay times of the Eq.-style estimate
    // 0.021*eps^2*n_q^4, clamped to [min_iterations, max_iterations];
    // noiseless cells use 3*T_u instead.
    std::size_t min_iterations = 300;
    std::size_t max_iterations = 20000;
    int workers = 0;  // 0 = library default
};

// For each cell: compile the circuit, obtain the noiseless period from an
// oracle run (seeds the noisy fit's T_u), run the ensemble, average w_a(t),
// fit, record. Cells that fail to fit carry their status in the row and the
// sweep continues. Output order matches input order regardless of schedule.
std::vector<SweepRecord> gamma_sweep(const std::vector<SweepCell>& cells,
                                     const SweepOptions& options);

struct PeriodScanCell {
    MapParams params;
    std::size_t iterations = 0;  // must cover at least one period
};

struct PeriodPoint {
    MapParams params;
    double hbar = 0.0;
    double t_u = 0.0;
    FitStatus status = FitStatus::Ok;
};

struct PeriodScanResult {
    std::vector<PeriodPoint> points;
    double s_action = 0.0;  // slope of ln T_u vs 1/hbar over Ok points
};

// Oracle-path period extraction (no noise, Gamma frozen at 0).
PeriodScanResult period_scan(const std::vector<PeriodScanCell>& cells,
                             InitialState init = InitialState::Coherent);

}  // namespace qcat
