#pragma once

#include <cstdint>

#include "qcat/circuit.hpp"
#include "qcat/state.hpp"

namespace qcat {

// Gate-angle jitter: every gate application rotates by its canonical angle
// plus an independent uniform draw from (-epsilon/2, epsilon/2). Jitter is
// re-sampled at every application (fresh draws each map iteration), keyed by
// (seed, realization_id, iteration, gate index).
struct NoiseModel {
    double epsilon = 0.0;
    bool exempt_work_qubit = false;  // gates acting on the work qubit stay ideal
    bool phase_gates_only = false;   // jitter only diagonal gates, not H/Toffoli
    uint64_t seed = 0;
    uint64_t realization_id = 0;
};

// Uniform draw from (-epsilon/2, epsilon/2) for one gate application.
double sample_jitter(const NoiseModel& model, uint64_t iteration, uint64_t gate_index);

// One noisy map iteration: each gate applied at angle theta + delta. A zero
// delta (epsilon = 0, exempted gate, or skipped kind) takes the exact kernel
// path, so epsilon = 0 reproduces the noiseless evolution bitwise.
void noisy_iterate(StateVector& state, const Circuit& c, const NoiseModel& model,
                   uint64_t iteration);

}  // namespace qcat
