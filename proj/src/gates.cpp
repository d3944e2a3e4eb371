#include "qcat/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qcat {

namespace {

void check_qubit(const StateVector& state, int q) {
    if (q < 0 || q >= state.n_q) throw std::invalid_argument("gate references invalid qubit");
}

// insert a bit with the given value at position `pos`, shifting higher bits up
inline uint64_t insert_bit(uint64_t x, int pos, uint64_t value) {
    const uint64_t low = x & ((uint64_t{1} << pos) - 1);
    const uint64_t high = x >> pos;
    return (high << (pos + 1)) | (value << pos) | low;
}

}  // namespace

Gate make_phase_subset(std::initializer_list<int> subset, double theta) {
    Gate g;
    g.kind = GateKind::PhaseSubset;
    g.angle = theta;
    if (subset.size() < 1 || subset.size() > 4) {
        throw std::invalid_argument("PhaseSubset supports |S| in 1..4");
    }
    for (int q : subset) g.qubits[g.nq_used++] = static_cast<uint8_t>(q);
    std::sort(g.qubits.begin(), g.qubits.begin() + g.nq_used);
    for (int i = 1; i < g.nq_used; ++i) {
        if (g.qubits[i] == g.qubits[i - 1]) {
            throw std::invalid_argument("PhaseSubset qubits must be distinct");
        }
    }
    return g;
}

Gate make_controlled_phase(int q1, int q2, double theta) {
    Gate g = make_phase_subset({q1, q2}, theta);
    g.kind = GateKind::ControlledPhase;
    return g;
}

Gate make_hadamard(int q) {
    Gate g;
    g.kind = GateKind::Hadamard;
    g.qubits[0] = static_cast<uint8_t>(q);
    g.nq_used = 1;
    g.angle = pi;
    return g;
}

Gate make_toffoli(int c1, int c2, int t) {
    if (c1 == c2 || c1 == t || c2 == t) {
        throw std::invalid_argument("Toffoli qubits must be distinct");
    }
    Gate g;
    g.kind = GateKind::Toffoli;
    g.qubits = {static_cast<uint8_t>(c1), static_cast<uint8_t>(c2), static_cast<uint8_t>(t), 0};
    g.nq_used = 3;
    g.angle = pi;
    return g;
}

void apply_phase_subset(StateVector& state, uint32_t mask, double theta) {
    if (mask == 0 || (mask >> state.n_q) != 0) {
        throw std::invalid_argument("apply_phase_subset: bad qubit mask");
    }
    int positions[4];
    int ns = 0;
    for (int q = 0; q < state.n_q; ++q) {
        if ((mask >> q) & 1u) {
            if (ns == 4) throw std::invalid_argument("apply_phase_subset: |S| > 4");
            positions[ns++] = q;
        }
    }
    const cdouble phase = std::polar(1.0, theta);
    const int64_t count = int64_t{1} << (state.n_q - ns);
    cdouble* amp = state.amp.data();
    // only the selected 2^(n_q-|S|) amplitudes are visited
#pragma omp parallel for if (state.size() >= kParallelMinAmplitudes) schedule(static)
    for (int64_t r = 0; r < count; ++r) {
        uint64_t idx = static_cast<uint64_t>(r);
        for (int i = 0; i < ns; ++i) idx = insert_bit(idx, positions[i], 1);
        amp[idx] *= phase;
    }
}

void apply_hadamard(StateVector& state, int q) {
    check_qubit(state, q);
    const uint64_t bit = uint64_t{1} << q;
    const double s = 1.0 / std::sqrt(2.0);
    const int64_t count = int64_t{1} << (state.n_q - 1);
    cdouble* amp = state.amp.data();
#pragma omp parallel for if (state.size() >= kParallelMinAmplitudes) schedule(static)
    for (int64_t r = 0; r < count; ++r) {
        const uint64_t i0 = insert_bit(static_cast<uint64_t>(r), q, 0);
        const uint64_t i1 = i0 | bit;
        const cdouble a = amp[i0];
        const cdouble b = amp[i1];
        amp[i0] = s * (a + b);
        amp[i1] = s * (a - b);
    }
}

void apply_toffoli(StateVector& state, int c1, int c2, int t) {
    check_qubit(state, c1);
    check_qubit(state, c2);
    check_qubit(state, t);
    if (c1 == c2 || c1 == t || c2 == t) {
        throw std::invalid_argument("apply_toffoli: duplicate qubit");
    }
    int positions[3] = {c1, c2, t};
    uint64_t values[3] = {1, 1, 0};
    // insertion positions must be ascending; keep each position's bit value
    for (int i = 1; i < 3; ++i) {
        for (int j = i; j > 0 && positions[j - 1] > positions[j]; --j) {
            std::swap(positions[j - 1], positions[j]);
            std::swap(values[j - 1], values[j]);
        }
    }
    const uint64_t tbit = uint64_t{1} << t;
    const int64_t count = int64_t{1} << (state.n_q - 3);
    cdouble* amp = state.amp.data();
#pragma omp parallel for if (state.size() >= kParallelMinAmplitudes) schedule(static)
    for (int64_t r = 0; r < count; ++r) {
        uint64_t i0 = static_cast<uint64_t>(r);
        for (int i = 0; i < 3; ++i) i0 = insert_bit(i0, positions[i], values[i]);
        std::swap(amp[i0], amp[i0 | tbit]);
    }
}

namespace {

// exp(i*theta*P) with P the projector onto H's -1 eigenvector:
// P+ psi + exp(i*theta) P- psi per amplitude pair; theta = pi gives H exactly
void apply_hadamard_rotation(StateVector& state, int q, double theta) {
    check_qubit(state, q);
    const uint64_t bit = uint64_t{1} << q;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cdouble ph = std::polar(1.0, theta);
    const int64_t count = int64_t{1} << (state.n_q - 1);
    cdouble* amp = state.amp.data();
#pragma omp parallel for if (state.size() >= kParallelMinAmplitudes) schedule(static)
    for (int64_t r = 0; r < count; ++r) {
        const uint64_t i0 = insert_bit(static_cast<uint64_t>(r), q, 0);
        const uint64_t i1 = i0 | bit;
        const cdouble a = amp[i0];
        const cdouble b = amp[i1];
        const cdouble h0 = inv_sqrt2 * (a + b);
        const cdouble h1 = inv_sqrt2 * (a - b);
        amp[i0] = 0.5 * ((a + h0) + ph * (a - h0));
        amp[i1] = 0.5 * ((b + h1) + ph * (b - h1));
    }
}

// exp(i*theta*P) with P projecting onto |c1 c2 = 11> x |-> on the target:
// phase exp(i*theta) on the X = -1 component inside the control-satisfied
// block; theta = pi gives the plain Toffoli exactly
void apply_toffoli_rotation(StateVector& state, int c1, int c2, int t, double theta) {
    check_qubit(state, c1);
    check_qubit(state, c2);
    check_qubit(state, t);
    int positions[3] = {c1, c2, t};
    uint64_t values[3] = {1, 1, 0};
    for (int i = 1; i < 3; ++i) {
        for (int j = i; j > 0 && positions[j - 1] > positions[j]; --j) {
            std::swap(positions[j - 1], positions[j]);
            std::swap(values[j - 1], values[j]);
        }
    }
    const uint64_t tbit = uint64_t{1} << t;
    const cdouble ph = std::polar(1.0, theta);
    const int64_t count = int64_t{1} << (state.n_q - 3);
    cdouble* amp = state.amp.data();
#pragma omp parallel for if (state.size() >= kParallelMinAmplitudes) schedule(static)
    for (int64_t r = 0; r < count; ++r) {
        uint64_t i0 = static_cast<uint64_t>(r);
        for (int i = 0; i < 3; ++i) i0 = insert_bit(i0, positions[i], values[i]);
        const uint64_t i1 = i0 | tbit;
        const cdouble u = 0.5 * (amp[i0] + amp[i1]);
        const cdouble v = 0.5 * (amp[i0] - amp[i1]);
        amp[i0] = u + ph * v;
        amp[i1] = u - ph * v;
    }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& g, std::optional<double> angle_override) {
    switch (g.kind) {
        case GateKind::PhaseSubset:
        case GateKind::ControlledPhase:
            apply_phase_subset(state, g.qubit_mask(), angle_override.value_or(g.angle));
            break;
        case GateKind::Hadamard:
            if (!angle_override || *angle_override == pi) {
                apply_hadamard(state, g.qubits[0]);
            } else {
                apply_hadamard_rotation(state, g.qubits[0], *angle_override);
            }
            break;
        case GateKind::Toffoli:
            if (!angle_override || *angle_override == pi) {
                apply_toffoli(state, g.qubits[0], g.qubits[1], g.qubits[2]);
            } else {
                apply_toffoli_rotation(state, g.qubits[0], g.qubits[1], g.qubits[2],
                                       *angle_override);
            }
            break;
    }
}

}  // namespace qcat
