#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/dynamics.hpp"
#include "qcat/fit.hpp"
#include "qcat/oracle.hpp"

namespace qcat {

// Output writers. Every file starts with the same stamp:
//   # qcat <version>
//   # config_digest=<hex>
//   # seed=<seed>
// followed by a CSV header row. Numbers print via %.17g so files are
// byte-reproducible from (config, seed).

std::string format_double(double v);

// FNV-1a 64 of arbitrary bytes, hex; used for input digests.
std::string fnv64_hex(const std::string& bytes);

struct OutputStamp {
    std::string config_digest;
    uint64_t seed = 0;
};

// columns: orbit_id, t, x, p
std::string poincare_csv(const std::vector<std::vector<PhasePoint>>& orbits,
                         const OutputStamp& stamp);

// columns: t, m, x, W  (one row per grid point per recorded time)
std::string wx_csv(const OracleTrajectory& traj, const MapParams& params,
                   const OutputStamp& stamp);

// columns: t, W_a
std::string wa_csv(const std::vector<std::size_t>& times, const std::vector<double>& wa,
                   const OutputStamp& stamp);

// columns: n_q, K, a, epsilon, seed, realizations, T_u, gamma, rms_residual, status
std::string sweep_csv(const std::vector<SweepRecord>& records, const OutputStamp& stamp);

// all FitResult fields plus the input digest and stamp
std::string fit_json(const FitResult& fit, const std::string& input_digest,
                     const OutputStamp& stamp);

// Reads a wa.csv produced by wa_csv (comment lines skipped); returns the W_a
// column, assuming unit time stride.
std::vector<double> read_wa_csv(const std::string& path);

void write_file(const std::string& path, const std::string& content);

}  // namespace qcat
