#include "qcat/dynamics.hpp"

#include <stdexcept>

namespace qcat {

PhasePoint classical_step(PhasePoint pt, const MapParams& params) {
    double p_next = pt.p - params.K * params.potential_gradient(pt.x);
    double x_next = wrap_angle(pt.x + p_next);
    return {p_next, x_next};
}

std::vector<std::vector<PhasePoint>> poincare_section(const std::vector<PhasePoint>& starts,
                                                      const MapParams& params,
                                                      std::size_t iters) {
    if (iters < 1) throw std::invalid_argument("poincare_section: iters must be >= 1");
    std::vector<std::vector<PhasePoint>> orbits(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        auto& orbit = orbits[i];
        orbit.reserve(iters);
        PhasePoint pt = starts[i];
        for (std::size_t t = 0; t < iters; ++t) {
            pt = classical_step(pt, params);
            orbit.push_back({wrap_angle(pt.p), pt.x});
        }
    }
    return orbits;
}

}  // namespace qcat
