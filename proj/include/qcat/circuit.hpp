#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/gates.hpp"
#include "qcat/params.hpp"
#include "qcat/state.hpp"

namespace qcat {

// Multilinear form of the kick phase phi(m) = -K*V(x_m)/hbar over the bits of
// the register index m: phi(m) = theta0 + sum over subsets S of bits(m) of
// theta_S. Degree <= 4 since V is quartic, so only subsets with |S| <= 4
// carry weight. theta0 is a global phase and is never emitted as a gate.
struct PhasePolynomial {
    struct Term {
        uint32_t mask;  // subset of physical-register qubits
        double theta;   // reduced into (-pi, pi]
    };
    std::vector<Term> terms;
    double theta0 = 0.0;

    // sum over S subset-of bits(m), including theta0, reduced mod 2*pi
    double evaluate(uint32_t m) const;
};

struct GateCounts {
    std::size_t kick_toffoli = 0;
    std::size_t kick_phase = 0;
    std::size_t qft_h = 0;
    std::size_t qft_cphase = 0;
    std::size_t kinetic_phase = 0;
    std::size_t total = 0;
};

// One compiled map iteration: kick, forward QFT, kinetic rotation, inverse
// QFT. Gate order is fixed and deterministic so that noise realizations are
// reproducible. Stage offsets delimit [kick, qft, kinetic, iqft) in `gates`.
struct Circuit {
    MapParams params;
    std::vector<Gate> gates;
    std::size_t kick_end = 0;
    std::size_t qft_end = 0;
    std::size_t kinetic_end = 0;
    GateCounts counts;
};

// Kick compilation. phi(m) is expanded in powers of m (the -pi grid offset
// and the -2*a^2*x^2 term of V populate every degree 1..4) and each degree-d
// monomial is emitted per ordered index tuple (j1..jd), one gate group per
// tuple, following the product expansion of exp(i*phi). The whole degree-4
// stage runs through the work qubit:
//   tuple spanning >= 2 distinct qubits:
//       Toffoli(a,b,w) PhaseSubset({w} u rest) Toffoli(a,b,w)
//   with (a,b) the first two distinct qubits in tuple order, `rest` the others;
//   single-qubit tuples and all degree <= 3 tuples become direct PhaseSubset
//   gates over their distinct bits (alpha^2 = alpha).
// Tuples whose reduced angle is exactly zero are dropped (so K = 0 compiles
// to an empty kick). The returned polynomial is the merged multilinear form
// used for validation; the gate stream is intentionally not merged.
PhasePolynomial compile_kick_polynomial(const MapParams& params);
std::vector<Gate> compile_kick(const MapParams& params, PhasePolynomial* poly = nullptr);

// Standard QFT ladder on the physical register, kernel exp(+2*pi*i*m*k/N)/sqrt(N):
// per qubit one Hadamard plus controlled phases pi/2^d at bit distance d.
// No swap gates: the output is bit-reversed (momentum bit l sits at qubit
// n_p-1-l) and the kinetic stage addresses qubits through that relabeling,
// which the inverse QFT then undoes.
std::vector<Gate> compile_qft(const MapParams& params, bool inverse);

// Kinetic rotation diag exp(-i*hbar*k^2/2) = diag exp(-2*pi*i*k^2/N) in the
// post-QFT basis; k^2 expands over bit pairs into (n_p) singleton and
// C(n_p,2) pair phase gates, addressed bit-reversed as described above.
// Angles that reduce to zero are kept: they are genuine (jitterable) gates.
std::vector<Gate> compile_kinetic(const MapParams& params);

Circuit compile_map(const MapParams& params);

GateCounts gate_count(const Circuit& c);

// Exact circuit application (no noise), one full map iteration.
void apply_circuit(StateVector& state, const Circuit& c);

// One gate per line: KIND q_indices angle (17 significant digits).
std::string dump_circuit(const Circuit& c);

// position of momentum bit l in the post-QFT register
inline int bit_reversed(int l, int n_register) { return n_register - 1 - l; }

}  // namespace qcat
