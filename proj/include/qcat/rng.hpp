#pragma once

#include <cstdint>

namespace qcat {

// splitmix64 finalizer (Steele, Lea, Vigna): bijective 64-bit mixer.
inline uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Counter-based stream: the draw for a given (seed, realization, iteration,
// gate) is a pure function of the key, so parallel realizations and resumed
// runs see identical jitter regardless of scheduling or gate skipping.
inline uint64_t keyed_random_bits(uint64_t seed, uint64_t realization, uint64_t iteration,
                                  uint64_t gate_index) {
    uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ realization);
    h = splitmix64(h ^ iteration);
    h = splitmix64(h ^ gate_index);
    return h;
}

// strictly inside (0, 1)
inline double bits_to_unit_open(uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace qcat
