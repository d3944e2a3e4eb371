#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qcat/state.hpp"

namespace qcat {

enum class GateKind : uint8_t { PhaseSubset, Hadamard, Toffoli, ControlledPhase };

// One elementary gate. `angle` is the canonical rotation angle: the compiled
// phase for diagonal gates, pi for Hadamard and Toffoli. For PhaseSubset and
// ControlledPhase, `qubits[0..nq_used)` is the subset S (|S| <= 4) whose
// simultaneous 1-state acquires exp(i*angle); for Toffoli the layout is
// {control, control, target}.
struct Gate {
    GateKind kind = GateKind::PhaseSubset;
    std::array<uint8_t, 4> qubits{};
    uint8_t nq_used = 0;
    double angle = 0.0;

    uint32_t qubit_mask() const {
        uint32_t m = 0;
        for (int i = 0; i < nq_used; ++i) m |= uint32_t{1} << qubits[i];
        return m;
    }
};

Gate make_phase_subset(std::initializer_list<int> subset, double theta);
Gate make_controlled_phase(int q1, int q2, double theta);
Gate make_hadamard(int q);
Gate make_toffoli(int c1, int c2, int t);

// Statevector sizes at and above this are worth forking threads for; below it
// the kernels run serially (see tools/bench.cpp for the crossover measurement).
inline constexpr std::size_t kParallelMinAmplitudes = std::size_t{1} << 17;

// a_i *= exp(i*theta) for every basis index whose bits in `mask` are all set.
// Touches exactly size/2^|S| amplitudes.
void apply_phase_subset(StateVector& state, uint32_t mask, double theta);

void apply_hadamard(StateVector& state, int q);

// Swaps the amplitude pairs (i, i xor 2^t) for every i with bits c1, c2 set.
void apply_toffoli(StateVector& state, int c1, int c2, int t);

// Dispatch with the noise hook: when `angle_override` is present the gate is
// applied as exp(i*override*P) with P the gate's projector generator, the
// same form the diagonal gates use (exp(i*override) on the selected
// subspace). For Hadamard, P projects onto the -1 eigenvector of H; for
// Toffoli, onto |c1 c2 = 11> x |-> of the target. Every gate of the family
// reduces exactly to its ideal form at the canonical angle pi and stays
// unitary for every angle. Without an override the exact kernel runs.
void apply_gate(StateVector& state, const Gate& g,
                std::optional<double> angle_override = std::nullopt);

}  // namespace qcat
