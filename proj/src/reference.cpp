#include "qcat/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace qcat::ref {

std::vector<cdouble> dense_gate_matrix(const Gate& g, int n_q,
                                       std::optional<double> angle_override) {
    const std::size_t dim = std::size_t{1} << n_q;
    std::vector<cdouble> mat(dim * dim, cdouble(0.0));
    const double theta = angle_override.value_or(g.angle);

    auto at = [&](std::size_t row, std::size_t col) -> cdouble& { return mat[row * dim + col]; };

    switch (g.kind) {
        case GateKind::PhaseSubset:
        case GateKind::ControlledPhase: {
            const uint32_t mask = g.qubit_mask();
            const cdouble phase = std::polar(1.0, theta);
            for (std::size_t i = 0; i < dim; ++i) {
                at(i, i) = ((i & mask) == mask) ? phase : cdouble(1.0);
            }
            break;
        }
        case GateKind::Hadamard: {
            // (I + H)/2 + exp(i*theta)*(I - H)/2 on the target qubit
            const uint64_t bit = uint64_t{1} << g.qubits[0];
            const cdouble ph = std::polar(1.0, theta);
            const double s = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < dim; ++i) {
                const double hz = (i & bit) ? -s : s;  // diagonal element of H
                at(i, i) = 0.5 * ((1.0 + hz) + ph * (1.0 - hz));
                at(i, i ^ bit) = 0.5 * s * (1.0 - ph);
            }
            break;
        }
        case GateKind::Toffoli: {
            // controls satisfied: P+ + exp(i*theta) P- on the target
            const uint64_t c1 = uint64_t{1} << g.qubits[0];
            const uint64_t c2 = uint64_t{1} << g.qubits[1];
            const uint64_t tb = uint64_t{1} << g.qubits[2];
            const cdouble ph = std::polar(1.0, theta);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & c1) && (i & c2)) {
                    at(i, i) = 0.5 * (1.0 + ph);
                    at(i, i ^ tb) = 0.5 * (1.0 - ph);
                } else {
                    at(i, i) = 1.0;
                }
            }
            break;
        }
    }
    return mat;
}

void apply_dense(StateVector& state, const std::vector<cdouble>& matrix) {
    const std::size_t dim = state.size();
    if (matrix.size() != dim * dim) throw std::invalid_argument("apply_dense: size mismatch");
    std::vector<cdouble> out(dim, cdouble(0.0));
    for (std::size_t r = 0; r < dim; ++r) {
        cdouble acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) acc += matrix[r * dim + c] * state.amp[c];
        out[r] = acc;
    }
    state.amp = std::move(out);
}

std::vector<cdouble> dft_direct(const std::vector<cdouble>& in, int sign) {
    const std::size_t n = in.size();
    std::vector<cdouble> out(n, cdouble(0.0));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        cdouble acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const double arg = sign * 2.0 * pi * static_cast<double>(m * k % n) /
                               static_cast<double>(n);
            acc += in[m] * std::polar(1.0, arg);
        }
        out[k] = scale * acc;
    }
    return out;
}

void apply_phase_subset_serial(StateVector& state, uint32_t mask, double theta) {
    const cdouble phase = std::polar(1.0, theta);
    for (std::size_t i = 0; i < state.size(); ++i) {
        if ((i & mask) == mask) state.amp[i] *= phase;
    }
}

void apply_hadamard_serial(StateVector& state, int q) {
    const uint64_t bit = uint64_t{1} << q;
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (i & bit) continue;
        const cdouble a = state.amp[i];
        const cdouble b = state.amp[i | bit];
        state.amp[i] = s * (a + b);
        state.amp[i | bit] = s * (a - b);
    }
}

void apply_toffoli_serial(StateVector& state, int c1, int c2, int t) {
    const uint64_t m1 = uint64_t{1} << c1;
    const uint64_t m2 = uint64_t{1} << c2;
    const uint64_t tb = uint64_t{1} << t;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if ((i & m1) && (i & m2) && !(i & tb)) std::swap(state.amp[i], state.amp[i | tb]);
    }
}

}  // namespace qcat::ref
