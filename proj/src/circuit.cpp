#include "qcat/circuit.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qcat {

double PhasePolynomial::evaluate(uint32_t m) const {
    double acc = theta0;
    for (const auto& term : terms) {
        if ((m & term.mask) == term.mask) acc += term.theta;
    }
    return wrap_angle(acc);
}

namespace {

double kick_phase_at(const MapParams& params, std::size_t m) {
    return -params.K * params.potential(params.grid_x(m)) / params.hbar();
}

// theta_S = sum over subsets T of S of (-1)^(|S|-|T|) phi(m_T); exact for a
// degree-4 polynomial, every |S| > 4 coefficient vanishes identically
void collect_subset_terms(const MapParams& params, PhasePolynomial& poly) {
    const int n = params.register_qubits();
    poly.theta0 = wrap_angle(kick_phase_at(params, 0));

    int idx[4] = {0, 0, 0, 0};
    for (int size = 1; size <= std::min(4, n); ++size) {
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            uint32_t mask = 0;
            for (int i = 0; i < size; ++i) mask |= uint32_t{1} << idx[i];
            double theta = 0.0;
            for (uint32_t sub = 0;; sub = (sub - mask) & mask) {  // sub runs over subsets of mask
                const int parity = (size - std::popcount(sub)) & 1;
                const double phi = kick_phase_at(params, sub);
                theta += parity ? -phi : phi;
                if (sub == mask) break;
            }
            poly.terms.push_back({mask, wrap_angle(theta)});

            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
}

// polynomial phi(m) = g4 m^4 + g3 m^3 + g2 m^2 + g1 m + g0 from
// phi = -(K/hbar) * ((c0 + c1 m)^2 - a^2)^2 with c0 = -pi, c1 = 2*pi/N
struct KickCoefficients {
    double g1, g2, g3, g4;
};

KickCoefficients kick_coefficients(const MapParams& params) {
    const double c0 = -pi;
    const double c1 = 2.0 * pi / static_cast<double>(params.levels());
    const double A = c1 * c1;
    const double B = 2.0 * c0 * c1;
    const double C = c0 * c0 - params.a * params.a;
    const double scale = -params.K / params.hbar();
    return {scale * 2.0 * B * C, scale * (B * B + 2.0 * A * C), scale * 2.0 * A * B,
            scale * A * A};
}

void push_subset_gate(std::vector<Gate>& gates, std::initializer_list<int> qubits,
                      double theta) {
    // collapse repeated indices (alpha^2 = alpha)
    int uniq[4];
    int n = 0;
    for (int q : qubits) {
        bool seen = false;
        for (int i = 0; i < n; ++i) seen |= (uniq[i] == q);
        if (!seen) uniq[n++] = q;
    }
    Gate g;
    g.kind = GateKind::PhaseSubset;
    g.angle = theta;
    for (int i = 0; i < n; ++i) g.qubits[g.nq_used++] = static_cast<uint8_t>(uniq[i]);
    gates.push_back(g);
}

}  // namespace

PhasePolynomial compile_kick_polynomial(const MapParams& params) {
    PhasePolynomial poly;
    collect_subset_terms(params, poly);
    return poly;
}

std::vector<Gate> compile_kick(const MapParams& params, PhasePolynomial* poly) {
    if (params.n_q < 5) throw std::invalid_argument("compile_kick: need n_q >= 5");
    if (poly) *poly = compile_kick_polynomial(params);

    std::vector<Gate> gates;
    const int n = params.register_qubits();
    const int w = params.n_q - 1;
    const auto [g1, g2, g3, g4] = kick_coefficients(params);

    // degree 4: every tuple whose monomial spans >= 2 distinct qubits runs
    // through the work qubit; controls are the first two distinct qubits in
    // tuple order, the remaining distinct bits join the phase subset
    for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
            for (int j3 = 0; j3 < n; ++j3) {
                for (int j4 = 0; j4 < n; ++j4) {
                    const double theta = wrap_angle(std::ldexp(g4, j1 + j2 + j3 + j4));
                    if (theta == 0.0) continue;
                    int distinct[4];
                    int nd = 0;
                    for (int j : {j1, j2, j3, j4}) {
                        bool seen = false;
                        for (int i = 0; i < nd; ++i) seen |= (distinct[i] == j);
                        if (!seen) distinct[nd++] = j;
                    }
                    if (nd >= 2) {
                        gates.push_back(make_toffoli(distinct[0], distinct[1], w));
                        if (nd == 2) {
                            push_subset_gate(gates, {w}, theta);
                        } else if (nd == 3) {
                            push_subset_gate(gates, {w, distinct[2]}, theta);
                        } else {
                            push_subset_gate(gates, {w, distinct[2], distinct[3]}, theta);
                        }
                        gates.push_back(make_toffoli(distinct[0], distinct[1], w));
                    } else {
                        push_subset_gate(gates, {distinct[0]}, theta);
                    }
                }
            }
        }
    }
    for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
            for (int j3 = 0; j3 < n; ++j3) {
                const double theta = wrap_angle(std::ldexp(g3, j1 + j2 + j3));
                if (theta != 0.0) push_subset_gate(gates, {j1, j2, j3}, theta);
            }
        }
    }
    for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
            const double theta = wrap_angle(std::ldexp(g2, j1 + j2));
            if (theta != 0.0) push_subset_gate(gates, {j1, j2}, theta);
        }
    }
    for (int j1 = 0; j1 < n; ++j1) {
        const double theta = wrap_angle(std::ldexp(g1, j1));
        if (theta != 0.0) push_subset_gate(gates, {j1}, theta);
    }
    return gates;
}

std::vector<Gate> compile_qft(const MapParams& params, bool inverse) {
    const int n = params.register_qubits();
    std::vector<Gate> gates;
    if (!inverse) {
        for (int q = n - 1; q >= 0; --q) {
            gates.push_back(make_hadamard(q));
            for (int d = 1; d <= q; ++d) {
                gates.push_back(make_controlled_phase(q - d, q, pi / std::ldexp(1.0, d)));
            }
        }
    } else {
        for (int q = 0; q < n; ++q) {
            for (int d = q; d >= 1; --d) {
                gates.push_back(make_controlled_phase(q - d, q, -pi / std::ldexp(1.0, d)));
            }
            gates.push_back(make_hadamard(q));
        }
    }
    return gates;
}

std::vector<Gate> compile_kinetic(const MapParams& params) {
    const int n = params.register_qubits();
    const double N = static_cast<double>(params.levels());
    std::vector<Gate> gates;
    // k^2 = sum_l 4^l b_l + sum_{l1<l2} 2^(l1+l2+1) b_l1 b_l2, momentum bit l
    // addressed at qubit n-1-l (QFT output order)
    for (int l = 0; l < n; ++l) {
        const double theta = wrap_angle(-2.0 * pi * std::ldexp(1.0, 2 * l) / N);
        gates.push_back(make_phase_subset({bit_reversed(l, n)}, theta));
    }
    for (int l1 = 0; l1 < n; ++l1) {
        for (int l2 = l1 + 1; l2 < n; ++l2) {
            const double theta = wrap_angle(-2.0 * pi * std::ldexp(1.0, l1 + l2 + 1) / N);
            gates.push_back(
                make_phase_subset({bit_reversed(l1, n), bit_reversed(l2, n)}, theta));
        }
    }
    return gates;
}

Circuit compile_map(const MapParams& params) {
    Circuit c;
    c.params = params;
    c.gates = compile_kick(params);
    c.kick_end = c.gates.size();
    for (auto& g : compile_qft(params, false)) c.gates.push_back(g);
    c.qft_end = c.gates.size();
    for (auto& g : compile_kinetic(params)) c.gates.push_back(g);
    c.kinetic_end = c.gates.size();
    for (auto& g : compile_qft(params, true)) c.gates.push_back(g);
    c.counts = gate_count(c);
    return c;
}

GateCounts gate_count(const Circuit& c) {
    GateCounts n;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (i < c.kick_end) {
            if (g.kind == GateKind::Toffoli) {
                ++n.kick_toffoli;
            } else {
                ++n.kick_phase;
            }
        } else if (i < c.qft_end || i >= c.kinetic_end) {
            if (g.kind == GateKind::Hadamard) {
                ++n.qft_h;
            } else {
                ++n.qft_cphase;
            }
        } else {
            ++n.kinetic_phase;
        }
    }
    n.total = c.gates.size();
    return n;
}

void apply_circuit(StateVector& state, const Circuit& c) {
    for (const Gate& g : c.gates) apply_gate(state, g);
}

std::string dump_circuit(const Circuit& c) {
    std::string out;
    char buf[128];
    for (const Gate& g : c.gates) {
        const char* kind = nullptr;
        switch (g.kind) {
            case GateKind::PhaseSubset: kind = "PHASE"; break;
            case GateKind::ControlledPhase: kind = "CPHASE"; break;
            case GateKind::Hadamard: kind = "H"; break;
            case GateKind::Toffoli: kind = "TOFFOLI"; break;
        }
        out += kind;
        for (int i = 0; i < g.nq_used; ++i) {
            std::snprintf(buf, sizeof buf, " %d", static_cast<int>(g.qubits[i]));
            out += buf;
        }
        std::snprintf(buf, sizeof buf, " %.17g\n", g.angle);
        out += buf;
    }
    return out;
}

}  // namespace qcat
