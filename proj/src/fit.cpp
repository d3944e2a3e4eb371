#include "qcat/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qcat/oracle.hpp"
#include "qcat/params.hpp"

namespace qcat {

std::string to_string(FitStatus s) {
    switch (s) {
        case FitStatus::Ok: return "ok";
        case FitStatus::NoOscillation: return "no_oscillation";
        case FitStatus::NonConvergence: return "non_convergence";
        case FitStatus::InsufficientData: return "insufficient_data";
    }
    return "unknown";
}

namespace {

// in-place Gaussian elimination with partial pivoting; a is n*n row-major,
// b the right-hand side; returns false on a (numerically) singular system
bool solve_linear(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        }
        if (std::abs(a[pivot * n + col]) < 1e-300) return false;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            std::swap(b[pivot], b[col]);
        }
        const double inv = 1.0 / a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] * inv;
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r * n + c] * b[c];
        b[r] = acc / a[r * n + r];
    }
    return true;
}

struct SpectralPeak {
    bool found = false;
    double omega = 0.0;
};

// dominant frequency of the detrended series via a zero-padded power-of-two
// DFT; the peak must clear 5x the median magnitude to count as an oscillation
SpectralPeak spectral_peak(const std::vector<double>& z) {
    std::size_t padded = 1;
    while (padded < z.size()) padded <<= 1;
    std::vector<cdouble> buf(padded, cdouble(0.0));
    for (std::size_t i = 0; i < z.size(); ++i) buf[i] = z[i];
    fft_pow2(buf, -1);

    const std::size_t half = padded / 2;
    std::vector<double> mag(half);
    for (std::size_t k = 1; k <= half; ++k) mag[k - 1] = std::abs(buf[k]);

    std::vector<double> sorted = mag;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];

    std::size_t best = 0;
    for (std::size_t i = 1; i < mag.size(); ++i) {
        if (mag[i] > mag[best]) best = i;
    }
    SpectralPeak peak;
    if (mag[best] <= 5.0 * median || mag[best] == 0.0) return peak;

    double k_refined = static_cast<double>(best + 1);
    if (best >= 1 && best + 2 < mag.size()) {
        const double y0 = mag[best - 1], y1 = mag[best], y2 = mag[best + 1];
        const double denom = y0 - 2.0 * y1 + y2;
        if (denom != 0.0) k_refined += 0.5 * (y0 - y2) / denom;
    }
    peak.found = true;
    peak.omega = 2.0 * pi * k_refined / static_cast<double>(padded);
    return peak;
}

struct Extremum {
    std::size_t t;
    double value;  // |z|
};

std::vector<Extremum> envelope_extrema(const std::vector<double>& z) {
    std::vector<Extremum> ext;
    const std::size_t n = z.size();
    auto mag = [&](std::size_t i) { return std::abs(z[i]); };
    if (n >= 2 && mag(0) >= mag(1)) ext.push_back({0, mag(0)});
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (mag(i) >= mag(i - 1) && mag(i) >= mag(i + 1) && mag(i) > 0.0) {
            ext.push_back({i, mag(i)});
        }
    }
    return ext;
}

double envelope_decay_rate(const std::vector<Extremum>& ext) {
    // least-squares slope of log magnitude vs time over the extrema
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& e : ext) {
        if (e.value < 1e-14) continue;
        const double x = static_cast<double>(e.t);
        const double y = std::log(e.value);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) return 0.0;
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    const double slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
    return std::max(0.0, -slope);
}

struct Model {
    // p = {baseline, A, gamma, omega, phi}
    static double eval(const double* p, double t) {
        return p[0] + p[1] * std::exp(-p[2] * t) * std::cos(p[3] * t + p[4]);
    }
    static void jacobian(const double* p, double t, double* row) {
        const double e = std::exp(-p[2] * t);
        const double c = std::cos(p[3] * t + p[4]);
        const double s = std::sin(p[3] * t + p[4]);
        row[0] = 1.0;
        row[1] = e * c;
        row[2] = -t * p[1] * e * c;
        row[3] = -t * p[1] * e * s;
        row[4] = -p[1] * e * s;
    }
};

double weighted_chi2(const std::vector<double>& y, const std::vector<double>& wgt,
                     const double* p) {
    double chi2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double r = Model::eval(p, static_cast<double>(i)) - y[i];
        chi2 += wgt[i] * r * r;
    }
    return chi2;
}

// one Levenberg-Marquardt descent; returns true when converged
bool lm_minimize(const std::vector<double>& y, const std::vector<double>& wgt, double* p,
                 const bool* free_mask, std::size_t max_iterations, std::size_t* used) {
    constexpr int kNP = 5;
    int map[kNP];
    int nfree = 0;
    for (int i = 0; i < kNP; ++i) {
        if (free_mask[i]) map[nfree++] = i;
    }

    double chi2 = weighted_chi2(y, wgt, p);
    double lambda = 1e-3;
    bool converged = false;
    std::size_t it = 0;
    for (; it < max_iterations && !converged; ++it) {
        std::vector<double> jtj(nfree * nfree, 0.0);
        std::vector<double> jtr(nfree, 0.0);
        double row[kNP];
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double t = static_cast<double>(i);
            const double r = Model::eval(p, t) - y[i];
            Model::jacobian(p, t, row);
            for (int a = 0; a < nfree; ++a) {
                const double ja = wgt[i] * row[map[a]];
                jtr[a] += ja * r;
                for (int b = a; b < nfree; ++b) jtj[a * nfree + b] += ja * row[map[b]];
            }
        }
        for (int a = 0; a < nfree; ++a) {
            for (int b = 0; b < a; ++b) jtj[a * nfree + b] = jtj[b * nfree + a];
        }

        bool accepted = false;
        for (int tries = 0; tries < 12 && !accepted; ++tries) {
            std::vector<double> lhs = jtj;
            std::vector<double> rhs(nfree);
            for (int a = 0; a < nfree; ++a) {
                lhs[a * nfree + a] += lambda * std::max(jtj[a * nfree + a], 1e-12);
                rhs[a] = -jtr[a];
            }
            if (!solve_linear(lhs, rhs, nfree)) {
                lambda *= 10.0;
                continue;
            }
            double trial[kNP];
            std::copy(p, p + kNP, trial);
            for (int a = 0; a < nfree; ++a) trial[map[a]] += rhs[a];
            const double trial_chi2 = weighted_chi2(y, wgt, trial);
            if (trial_chi2 <= chi2) {
                const double rel = (chi2 - trial_chi2) / std::max(chi2, 1e-300);
                std::copy(trial, trial + kNP, p);
                chi2 = trial_chi2;
                lambda = std::max(lambda * 0.3, 1e-12);
                accepted = true;
                if (rel < 1e-13) converged = true;
            } else {
                lambda *= 10.0;
                if (lambda > 1e12) break;
            }
        }
        if (!accepted) {
            // no downhill step even at heavy damping: stationary point
            converged = true;
            break;
        }
    }
    if (used) *used = it;
    return converged;
}

}  // namespace

FitResult fit_damped_cosine(const std::vector<double>& series, const FitOptions& options) {
    FitResult out;
    const std::size_t n = series.size();
    if (n < 8) {
        out.status = FitStatus::InsufficientData;
        return out;
    }

    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(n);

    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = series[i] - mean;

    double omega0;
    if (options.t_u_init) {
        omega0 = 2.0 * pi / *options.t_u_init;
    } else {
        const SpectralPeak peak = spectral_peak(z);
        if (!peak.found) {
            out.status = FitStatus::NoOscillation;
            return out;
        }
        omega0 = peak.omega;
    }

    const auto ext = envelope_extrema(z);
    const double gamma0 = options.freeze_gamma ? 0.0 : envelope_decay_rate(ext);
    const double amp0 = ext.empty() ? std::abs(z[0]) : ext.front().value;

    double p[5] = {mean, amp0 > 0.0 ? amp0 : 0.5, gamma0, omega0, 0.0};
    const bool free_mask[5] = {true, true, !options.freeze_gamma, true, true};

    std::vector<double> wgt(n, 1.0);
    std::size_t used = 0;
    bool converged = lm_minimize(series, wgt, p, free_mask, options.max_iterations,
                                 &used);
    out.iterations = used;

    if (options.tail_downweight && p[2] > 0.0) {
        // residual floor from the converged unit-weight fit
        double rss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = Model::eval(p, static_cast<double>(i)) - series[i];
            rss += r * r;
        }
        const double floor = std::sqrt(rss / static_cast<double>(n));
        const double env_cut = 2.0 * floor;
        if (std::abs(p[1]) > env_cut && floor > 0.0) {
            const double t_cut = std::log(std::abs(p[1]) / env_cut) / p[2];
            if (t_cut < static_cast<double>(n - 1)) {
                for (std::size_t i = static_cast<std::size_t>(t_cut); i < n; ++i) wgt[i] = 0.25;
                std::size_t used2 = 0;
                converged = lm_minimize(series, wgt, p, free_mask,
                                        options.max_iterations, &used2);
                out.iterations += used2;
            }
        }
    }

    // canonical parameter ranges: A >= 0, omega > 0, phi in (-pi, pi]
    if (p[1] < 0.0) {
        p[1] = -p[1];
        p[4] += pi;
    }
    if (p[3] < 0.0) {
        p[3] = -p[3];
        p[4] = -p[4];
    }
    p[4] = wrap_angle(p[4]);

    if (!converged) {
        out.status = FitStatus::NonConvergence;
    }
    if (p[3] <= 0.0) {
        out.status = FitStatus::NoOscillation;
        return out;
    }

    out.baseline = p[0];
    out.amplitude = p[1];
    out.gamma = options.freeze_gamma ? 0.0 : p[2];
    out.t_u = 2.0 * pi / p[3];
    out.phi = p[4];
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = Model::eval(p, static_cast<double>(i)) - series[i];
        rss += r * r;
    }
    out.rms_residual = std::sqrt(rss / static_cast<double>(n));
    return out;
}

ScalingResult fit_scaling(const std::vector<SweepRecord>& records) {
    std::vector<const SweepRecord*> rows;
    std::set<double> eps_values;
    std::set<int> nq_values;
    for (const auto& r : records) {
        if (r.status == FitStatus::Ok && r.epsilon > 0.0 && r.gamma > 0.0) {
            rows.push_back(&r);
            eps_values.insert(r.epsilon);
            nq_values.insert(r.n_q);
        }
    }
    if (eps_values.size() < 3 || nq_values.size() < 2) {
        throw std::invalid_argument(
            "fit_scaling: insufficient spread (need >= 3 distinct epsilon, >= 2 distinct n_q)");
    }

    // normal equations for ln gamma = c0 + p*ln eps + q*ln n_q
    std::vector<double> xtx(9, 0.0);
    std::vector<double> xty(3, 0.0);
    for (const auto* r : rows) {
        const double x[3] = {1.0, std::log(r->epsilon), std::log(static_cast<double>(r->n_q))};
        const double y = std::log(r->gamma);
        for (int a = 0; a < 3; ++a) {
            xty[a] += x[a] * y;
            for (int b = 0; b < 3; ++b) xtx[a * 3 + b] += x[a] * x[b];
        }
    }
    std::vector<double> beta = xty;
    std::vector<double> lhs = xtx;
    if (!solve_linear(lhs, beta, 3)) {
        throw std::invalid_argument("fit_scaling: singular design matrix");
    }

    double rss = 0.0;
    for (const auto* r : rows) {
        const double pred = beta[0] + beta[1] * std::log(r->epsilon) +
                            beta[2] * std::log(static_cast<double>(r->n_q));
        const double d = std::log(r->gamma) - pred;
        rss += d * d;
    }
    const double dof = static_cast<double>(rows.size()) - 3.0;
    const double sigma2 = dof > 0.0 ? rss / dof : 0.0;

    // diagonal of (X^T X)^-1 via three solves
    double variances[3] = {0.0, 0.0, 0.0};
    for (int j = 0; j < 3; ++j) {
        std::vector<double> a = xtx;
        std::vector<double> e(3, 0.0);
        e[j] = 1.0;
        if (solve_linear(a, e, 3)) variances[j] = e[j];
    }

    ScalingResult res;
    res.prefactor = std::exp(beta[0]);
    res.exponent_eps = beta[1];
    res.exponent_nq = beta[2];
    res.stderr_log_prefactor = std::sqrt(std::max(0.0, sigma2 * variances[0]));
    res.stderr_eps = std::sqrt(std::max(0.0, sigma2 * variances[1]));
    res.stderr_nq = std::sqrt(std::max(0.0, sigma2 * variances[2]));
    return res;
}

}  // namespace qcat
