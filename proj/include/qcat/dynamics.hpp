#pragma once

#include <cstddef>
#include <vector>

#include "qcat/params.hpp"

namespace qcat {

struct PhasePoint {
    double p = 0.0;  // momentum, unbounded during iteration
    double x = 0.0;  // coordinate in (-pi, pi]
};

// One iteration of the classical double-well map:
//   p' = p - K dV/dx(x),  x' = x + p'  (mod 2*pi, into (-pi, pi])
// Momentum is left unreduced; reduction happens only for section output.
PhasePoint classical_step(PhasePoint pt, const MapParams& params);

// Stroboscopic section: per start, `iters` iterates with both x and p folded
// into (-pi, pi] for plotting. orbits[i][t] is iterate t+1 of starts[i].
std::vector<std::vector<PhasePoint>> poincare_section(const std::vector<PhasePoint>& starts,
                                                      const MapParams& params,
                                                      std::size_t iters);

}  // namespace qcat
