#pragma once

// Serial reference implementations kept for testing and benchmarking: dense
// gate matrices applied by full matrix-vector product, a direct O(N^2)
// discrete Fourier transform, and unthreaded copies of the production
// kernels. These are the independent oracles the fast paths are checked
// against; nothing here is called from the simulation paths.

#include <vector>

#include "qcat/gates.hpp"
#include "qcat/state.hpp"

namespace qcat::ref {

// Dense 2^n_q x 2^n_q unitary of a gate (row-major), optionally with the
// rotation-path angle override.
std::vector<cdouble> dense_gate_matrix(const Gate& g, int n_q,
                                       std::optional<double> angle_override = std::nullopt);

// state <- M * state with M dense row-major.
void apply_dense(StateVector& state, const std::vector<cdouble>& matrix);

// Direct DFT, kernel exp(sign * 2*pi*i*m*k/N)/sqrt(N).
std::vector<cdouble> dft_direct(const std::vector<cdouble>& in, int sign);

// Serial twins of the production kernels (no OpenMP), same arithmetic.
void apply_phase_subset_serial(StateVector& state, uint32_t mask, double theta);
void apply_hadamard_serial(StateVector& state, int q);
void apply_toffoli_serial(StateVector& state, int c1, int c2, int t);

}  // namespace qcat::ref
