#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcat/params.hpp"

namespace qcat {

using cdouble = std::complex<double>;

// Full simulator state: 2^n_q amplitudes, little-endian bits (qubit j carries
// 2^j). Basis index i = m + N*w with m in [0, N) the physical register and
// w in {0,1} the work qubit (qubit n_q-1).
struct StateVector {
    int n_q = 0;
    std::vector<cdouble> amp;

    StateVector() = default;
    explicit StateVector(int qubits) : n_q(qubits), amp(std::size_t{1} << qubits) {}

    std::size_t size() const { return amp.size(); }
    std::size_t levels() const { return amp.size() >> 1; }  // N, register dimension
    int work_qubit() const { return n_q - 1; }

    double norm2() const;
};

// Periodized Gaussian packet centred at (x0, p0), width sigma^2 = hbar/(2*omega)
// with omega = 2*a*sqrt(2*K); image sum truncated at one period each side
// (tails beyond that are < 1e-30 at all supported sizes). Work qubit in |0>.
StateVector init_coherent(const MapParams& params, double x0, double p0);

// Step distribution: amplitude sqrt(2/N) on every grid point with x_m < 0.
StateVector init_step(const MapParams& params);

// Register state from N complex values (work qubit |0>), and its inverse.
StateVector embed_register(const std::vector<cdouble>& reg, int n_q);
std::vector<cdouble> extract_register(const StateVector& state);  // w = 0 block

// W_m = |a_{m,w=0}|^2 + |a_{m,w=1}|^2, the work qubit traced out.
std::vector<double> distribution(const StateVector& state);

// Total probability on x < 0, i.e. register indices m = 0..N/2-1.
double w_alive(const StateVector& state);
double w_alive(const std::vector<double>& dist);

// <s1|s2>; fidelity = |overlap|^2. Throws on dimension mismatch.
cdouble overlap(const StateVector& s1, const StateVector& s2);

}  // namespace qcat
