#include "qcat/noise.hpp"

#include "qcat/rng.hpp"

namespace qcat {

double sample_jitter(const NoiseModel& model, uint64_t iteration, uint64_t gate_index) {
    if (model.epsilon == 0.0) return 0.0;
    const uint64_t bits =
        keyed_random_bits(model.seed, model.realization_id, iteration, gate_index);
    return model.epsilon * (bits_to_unit_open(bits) - 0.5);
}

void noisy_iterate(StateVector& state, const Circuit& c, const NoiseModel& model,
                   uint64_t iteration) {
    const uint32_t work_mask = uint32_t{1} << (c.params.n_q - 1);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        double delta = 0.0;
        const bool diagonal =
            g.kind == GateKind::PhaseSubset || g.kind == GateKind::ControlledPhase;
        const bool skip = (model.exempt_work_qubit && (g.qubit_mask() & work_mask)) ||
                          (model.phase_gates_only && !diagonal);
        if (!skip) delta = sample_jitter(model, iteration, i);
        if (delta == 0.0) {
            apply_gate(state, g);
        } else {
            apply_gate(state, g, g.angle + delta);
        }
    }
}

}  // namespace qcat
