#pragma once

#include <vector>

#include "qcat/params.hpp"
#include "qcat/state.hpp"

namespace qcat {

// Split-operator reference propagator for the quantum map, O(N log N) per
// step: multiply by exp(-i*K*V(x_m)/hbar), forward DFT with kernel
// exp(-2*pi*i*m*k/N)/sqrt(N), multiply by exp(-2*pi*i*k^2/N), inverse DFT.
// Used to validate the compiled circuit and to run fast parameter scans.

// Radix-2 decimation-in-time FFT with symmetric 1/sqrt(N) normalization.
// sign = -1 forward (matches the propagator's convention), +1 inverse.
void fft_pow2(std::vector<cdouble>& data, int sign);

class SplitOperator {
  public:
    explicit SplitOperator(const MapParams& params);

    const MapParams& params() const { return params_; }

    // One map iteration in place. psi.size() must equal N.
    void step(std::vector<cdouble>& psi) const;

  private:
    MapParams params_;
    std::vector<cdouble> kick_phase_;
    std::vector<cdouble> kinetic_phase_;
};

void split_operator_step(std::vector<cdouble>& psi, const MapParams& params);

struct OracleTrajectory {
    std::vector<std::size_t> times;
    std::vector<std::vector<double>> distributions;  // W over x_m at each recorded time
    std::vector<double> wa;                          // alive probability at each recorded time
};

// Repeated split-operator steps with W recorded every `stride` iterations
// (t = 0 included). psi is evolved in place to t = iterations.
OracleTrajectory evolve_oracle(std::vector<cdouble>& psi, const MapParams& params,
                               std::size_t iterations, std::size_t stride = 1);

// Alive-probability series w_a(t) for t = 0..iterations, cheapest form of the
// above for fitting.
std::vector<double> oracle_wa_series(std::vector<cdouble> psi, const MapParams& params,
                                     std::size_t iterations);

}  // namespace qcat
