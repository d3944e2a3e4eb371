#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace qcat {

inline constexpr double pi = std::numbers::pi;

// Reduce an angle into the half-open cell (-pi, pi]; -pi maps to +pi.
inline double wrap_angle(double v) {
    double r = std::remainder(v, 2.0 * pi);
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

// Map constants: kick strength K, well position a (wells of V(x) = (x^2-a^2)^2
// sit at x = +-a), and the qubit budget n_q. One qubit is the work qubit, so the
// physical register holds N = 2^(n_q-1) levels and hbar = 4*pi/N (quantum
// resonance: the kinetic phase exp(-i*hbar*n^2/2) is N-periodic in n).
struct MapParams {
    double K = 0.04;
    double a = 1.6;
    int n_q = 6;

    MapParams() = default;
    MapParams(double kick, double well, int qubits) : K(kick), a(well), n_q(qubits) {
        if (n_q < 4) throw std::invalid_argument("MapParams: n_q must be >= 4");
        if (!(a > 0.0) || !(a < pi)) throw std::invalid_argument("MapParams: need 0 < a < pi");
        if (K < 0.0) throw std::invalid_argument("MapParams: need K >= 0");
    }

    int register_qubits() const { return n_q - 1; }
    std::size_t levels() const { return std::size_t{1} << (n_q - 1); }  // N
    double hbar() const { return 4.0 * pi / static_cast<double>(levels()); }

    // position grid x_m = -pi + 2*pi*m/N, m = 0..N-1; x_0 = -pi, x_{N/2} = 0
    double grid_x(std::size_t m) const {
        return -pi + 2.0 * pi * static_cast<double>(m) / static_cast<double>(levels());
    }

    double potential(double x) const {
        double u = x * x - a * a;
        return u * u;
    }
    double potential_gradient(double x) const { return 4.0 * x * (x * x - a * a); }

    // small-oscillation frequency at the well bottom, omega^2 = K*V''(+-a) = 8*K*a^2
    double well_frequency() const { return 2.0 * a * std::sqrt(2.0 * K); }
};

}  // namespace qcat
