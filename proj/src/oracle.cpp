#include "qcat/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcat {

void fft_pow2(std::vector<cdouble>& data, int sign) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_pow2: size not 2^k");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * pi / static_cast<double>(len);
        const cdouble wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cdouble w(1.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cdouble u = data[i + j];
                const cdouble v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& c : data) c *= scale;
}

SplitOperator::SplitOperator(const MapParams& params) : params_(params) {
    const std::size_t N = params.levels();
    kick_phase_.resize(N);
    kinetic_phase_.resize(N);
    for (std::size_t m = 0; m < N; ++m) {
        kick_phase_[m] =
            std::polar(1.0, -params.K * params.potential(params.grid_x(m)) / params.hbar());
    }
    for (std::size_t k = 0; k < N; ++k) {
        kinetic_phase_[k] =
            std::polar(1.0, -2.0 * pi * static_cast<double>(k * k % N) / static_cast<double>(N));
    }
}

void SplitOperator::step(std::vector<cdouble>& psi) const {
    const std::size_t N = params_.levels();
    if (psi.size() != N) throw std::invalid_argument("split_operator_step: psi size != N");
    for (std::size_t m = 0; m < N; ++m) psi[m] *= kick_phase_[m];
    fft_pow2(psi, -1);
    for (std::size_t k = 0; k < N; ++k) psi[k] *= kinetic_phase_[k];
    fft_pow2(psi, +1);
}

void split_operator_step(std::vector<cdouble>& psi, const MapParams& params) {
    SplitOperator(params).step(psi);
}

namespace {

std::vector<double> register_distribution(const std::vector<cdouble>& psi) {
    std::vector<double> w(psi.size());
    for (std::size_t m = 0; m < psi.size(); ++m) w[m] = std::norm(psi[m]);
    return w;
}

double register_wa(const std::vector<cdouble>& psi) {
    double s = 0.0;
    for (std::size_t m = 0; m < psi.size() / 2; ++m) s += std::norm(psi[m]);
    return s;
}

}  // namespace

OracleTrajectory evolve_oracle(std::vector<cdouble>& psi, const MapParams& params,
                               std::size_t iterations, std::size_t stride) {
    if (stride == 0) stride = 1;
    SplitOperator op(params);
    OracleTrajectory traj;
    for (std::size_t t = 0;; ++t) {
        if (t % stride == 0 || t == iterations) {
            traj.times.push_back(t);
            traj.distributions.push_back(register_distribution(psi));
            traj.wa.push_back(register_wa(psi));
        }
        if (t == iterations) break;
        op.step(psi);
    }
    return traj;
}

std::vector<double> oracle_wa_series(std::vector<cdouble> psi, const MapParams& params,
                                     std::size_t iterations) {
    SplitOperator op(params);
    std::vector<double> wa;
    wa.reserve(iterations + 1);
    for (std::size_t t = 0;; ++t) {
        wa.push_back(register_wa(psi));
        if (t == iterations) break;
        op.step(psi);
    }
    return wa;
}

}  // namespace qcat
