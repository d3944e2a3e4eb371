#include "qcat/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "qcat/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcat {

StateVector make_initial_state(const MapParams& params, InitialState kind) {
    if (kind == InitialState::Step) return init_step(params);
    return init_coherent(params, -params.a, 0.0);
}

namespace {

std::vector<double> one_realization_wa(const Circuit& circuit, NoiseModel model,
                                       uint64_t realization, std::size_t iterations,
                                       InitialState init) {
    model.realization_id = realization;
    StateVector state = make_initial_state(circuit.params, init);
    std::vector<double> wa(iterations + 1);
    for (std::size_t t = 0;; ++t) {
        wa[t] = w_alive(state);
        if (t == iterations) break;
        noisy_iterate(state, circuit, model, t);
    }
    return wa;
}

}  // namespace

std::vector<std::vector<double>> per_realization_wa_series(const Circuit& circuit,
                                                           const NoiseModel& base_model,
                                                           int realizations,
                                                           std::size_t iterations,
                                                           InitialState init, bool parallel) {
    std::vector<std::vector<double>> all(realizations);
#pragma omp parallel for schedule(dynamic) if (parallel && realizations > 1)
    for (int r = 0; r < realizations; ++r) {
        all[r] = one_realization_wa(circuit, base_model, static_cast<uint64_t>(r), iterations,
                                    init);
    }
    return all;
}

std::vector<double> ensemble_wa_series(const Circuit& circuit, const NoiseModel& base_model,
                                       int realizations, std::size_t iterations,
                                       InitialState init, bool parallel) {
    auto all = per_realization_wa_series(circuit, base_model, realizations, iterations, init,
                                         parallel);
    // reduce in realization order so output bytes do not depend on scheduling
    std::vector<double> mean(iterations + 1, 0.0);
    for (int r = 0; r < realizations; ++r) {
        for (std::size_t t = 0; t <= iterations; ++t) mean[t] += all[r][t];
    }
    const double inv = 1.0 / static_cast<double>(realizations);
    for (auto& v : mean) v *= inv;
    return mean;
}

namespace {

// Eq.-style decay estimate used only to size the measurement window.
double expected_gamma(double epsilon, int n_q) {
    const double nq4 = std::pow(static_cast<double>(n_q), 4.0);
    return 0.021 * epsilon * epsilon * nq4;
}

SweepRecord run_cell(const SweepCell& cell, const SweepOptions& options) {
    SweepRecord rec;
    rec.n_q = cell.n_q;
    rec.K = cell.K;
    rec.a = cell.a;
    rec.epsilon = cell.epsilon;
    rec.seed = options.seed;
    rec.realizations = options.realizations;

    const MapParams params(cell.K, cell.a, cell.n_q);

    // noiseless probe: period seed for the noisy fit and window for eps = 0
    const std::size_t probe_len =
        std::clamp<std::size_t>(4096, options.min_iterations, options.max_iterations);
    StateVector probe_state = make_initial_state(params, options.init);
    const auto probe_wa =
        oracle_wa_series(extract_register(probe_state), params, probe_len);
    FitOptions probe_opts;
    probe_opts.freeze_gamma = true;
    const FitResult probe = fit_damped_cosine(probe_wa, probe_opts);

    std::size_t t_max;
    if (cell.epsilon > 0.0) {
        const double window = 4.0 / expected_gamma(cell.epsilon, cell.n_q);
        t_max = std::clamp(static_cast<std::size_t>(std::ceil(window)),
                           options.min_iterations, options.max_iterations);
    } else {
        const double window = probe.ok() ? 3.0 * probe.t_u : 4096.0;
        t_max = std::clamp(static_cast<std::size_t>(std::ceil(window)),
                           options.min_iterations, options.max_iterations);
    }

    const Circuit circuit = compile_map(params);
    NoiseModel model;
    model.epsilon = cell.epsilon;
    model.seed = options.seed;
    model.exempt_work_qubit = options.exempt_work_qubit;

    const auto wa = ensemble_wa_series(circuit, model, options.realizations, t_max,
                                       options.init, /*parallel=*/false);

    FitOptions fit_opts;
    if (probe.ok()) fit_opts.t_u_init = probe.t_u;
    // noiseless cells have no decay channel; fit the pure cosine
    fit_opts.freeze_gamma = (cell.epsilon == 0.0);
    const FitResult fit = fit_damped_cosine(wa, fit_opts);

    rec.status = fit.status;
    rec.t_u = fit.t_u;
    rec.gamma = fit.gamma;
    rec.rms_residual = fit.rms_residual;
    return rec;
}

}  // namespace

std::vector<SweepRecord> gamma_sweep(const std::vector<SweepCell>& cells,
                                     const SweepOptions& options) {
#ifdef _OPENMP
    if (options.workers > 0) omp_set_num_threads(options.workers);
#endif
    std::vector<SweepRecord> records(cells.size());
#pragma omp parallel for schedule(dynamic) if (cells.size() > 1)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        records[i] = run_cell(cells[i], options);
    }
    return records;
}

PeriodScanResult period_scan(const std::vector<PeriodScanCell>& cells, InitialState init) {
    PeriodScanResult result;
    result.points.resize(cells.size());
#pragma omp parallel for schedule(dynamic) if (cells.size() > 1)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& cell = cells[i];
        PeriodPoint pt;
        pt.params = cell.params;
        pt.hbar = cell.params.hbar();
        StateVector state = make_initial_state(cell.params, init);
        const auto wa = oracle_wa_series(extract_register(state), cell.params, cell.iterations);
        FitOptions opts;
        opts.freeze_gamma = true;
        const FitResult fit = fit_damped_cosine(wa, opts);
        pt.status = fit.status;
        pt.t_u = fit.t_u;
        result.points[i] = pt;
    }

    // slope of ln T_u against 1/hbar over the points that fitted
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& pt : result.points) {
        if (pt.status != FitStatus::Ok || pt.t_u <= 0.0) continue;
        const double x = 1.0 / pt.hbar;
        const double y = std::log(pt.t_u);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n >= 2) {
        const double denom = static_cast<double>(n) * sxx - sx * sx;
        if (denom != 0.0) result.s_action = (static_cast<double>(n) * sxy - sx * sy) / denom;
    }
    return result;
}

}  // namespace qcat
