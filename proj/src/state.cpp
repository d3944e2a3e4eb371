#include "qcat/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qcat {

double StateVector::norm2() const {
    double s = 0.0;
    for (const auto& c : amp) s += std::norm(c);
    return s;
}

StateVector init_coherent(const MapParams& params, double x0, double p0) {
    if (!(params.K > 0.0)) {
        throw std::invalid_argument("init_coherent: packet width needs K > 0");
    }
    const double sigma2 = params.hbar() / (2.0 * params.well_frequency());
    const std::size_t N = params.levels();
    StateVector state(params.n_q);
    double norm = 0.0;
    for (std::size_t m = 0; m < N; ++m) {
        const double xm = params.grid_x(m);
        cdouble psi = 0.0;
        for (int img = -1; img <= 1; ++img) {
            const double x = xm + 2.0 * pi * img;
            const double d = x - x0;
            psi += std::exp(-d * d / (4.0 * sigma2)) *
                   std::polar(1.0, p0 * x / params.hbar());
        }
        state.amp[m] = psi;
        norm += std::norm(psi);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (std::size_t m = 0; m < N; ++m) state.amp[m] *= scale;
    return state;
}

StateVector init_step(const MapParams& params) {
    const std::size_t N = params.levels();
    StateVector state(params.n_q);
    const double a = std::sqrt(2.0 / static_cast<double>(N));
    for (std::size_t m = 0; m < N / 2; ++m) state.amp[m] = a;  // x_m < 0
    return state;
}

StateVector embed_register(const std::vector<cdouble>& reg, int n_q) {
    StateVector state(n_q);
    if (reg.size() != state.levels()) {
        throw std::invalid_argument("embed_register: register size != 2^(n_q-1)");
    }
    std::copy(reg.begin(), reg.end(), state.amp.begin());
    return state;
}

std::vector<cdouble> extract_register(const StateVector& state) {
    return {state.amp.begin(), state.amp.begin() + state.levels()};
}

std::vector<double> distribution(const StateVector& state) {
    const std::size_t N = state.levels();
    std::vector<double> w(N);
    for (std::size_t m = 0; m < N; ++m) {
        w[m] = std::norm(state.amp[m]) + std::norm(state.amp[m + N]);
    }
    return w;
}

double w_alive(const StateVector& state) {
    const std::size_t N = state.levels();
    double s = 0.0;
    for (std::size_t m = 0; m < N / 2; ++m) {
        s += std::norm(state.amp[m]) + std::norm(state.amp[m + N]);
    }
    return s;
}

double w_alive(const std::vector<double>& dist) {
    double s = 0.0;
    for (std::size_t m = 0; m < dist.size() / 2; ++m) s += dist[m];
    return s;
}

cdouble overlap(const StateVector& s1, const StateVector& s2) {
    if (s1.n_q != s2.n_q) throw std::invalid_argument("overlap: qubit count mismatch");
    cdouble acc = 0.0;
    for (std::size_t i = 0; i < s1.amp.size(); ++i) {
        acc += std::conj(s1.amp[i]) * s2.amp[i];
    }
    return acc;
}

}  // namespace qcat
