#include "qcat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qcat/version.hpp"

#include "json.hpp"

namespace qcat {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fnv64_hex(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : bytes) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string stamp_header(const OutputStamp& stamp) {
    std::string out = "# qcat ";
    out += kVersion;
    out += "\n# config_digest=";
    out += stamp.config_digest;
    out += "\n# seed=";
    out += std::to_string(stamp.seed);
    out += "\n";
    return out;
}

}  // namespace

std::string poincare_csv(const std::vector<std::vector<PhasePoint>>& orbits,
                         const OutputStamp& stamp) {
    std::string out = stamp_header(stamp);
    out += "orbit_id,t,x,p\n";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        for (std::size_t t = 0; t < orbits[i].size(); ++t) {
            out += std::to_string(i);
            out += ',';
            out += std::to_string(t);
            out += ',';
            out += format_double(orbits[i][t].x);
            out += ',';
            out += format_double(orbits[i][t].p);
            out += '\n';
        }
    }
    return out;
}

std::string wx_csv(const OracleTrajectory& traj, const MapParams& params,
                   const OutputStamp& stamp) {
    std::string out = stamp_header(stamp);
    out += "t,m,x,W\n";
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        const auto& dist = traj.distributions[s];
        for (std::size_t m = 0; m < dist.size(); ++m) {
            out += std::to_string(traj.times[s]);
            out += ',';
            out += std::to_string(m);
            out += ',';
            out += format_double(params.grid_x(m));
            out += ',';
            out += format_double(dist[m]);
            out += '\n';
        }
    }
    return out;
}

std::string wa_csv(const std::vector<std::size_t>& times, const std::vector<double>& wa,
                   const OutputStamp& stamp) {
    if (times.size() != wa.size()) throw std::invalid_argument("wa_csv: size mismatch");
    std::string out = stamp_header(stamp);
    out += "t,W_a\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        out += std::to_string(times[i]);
        out += ',';
        out += format_double(wa[i]);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRecord>& records, const OutputStamp& stamp) {
    std::string out = stamp_header(stamp);
    out += "n_q,K,a,epsilon,seed,realizations,T_u,gamma,rms_residual,status\n";
    for (const auto& r : records) {
        out += std::to_string(r.n_q);
        out += ',';
        out += format_double(r.K);
        out += ',';
        out += format_double(r.a);
        out += ',';
        out += format_double(r.epsilon);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.realizations);
        out += ',';
        out += format_double(r.t_u);
        out += ',';
        out += format_double(r.gamma);
        out += ',';
        out += format_double(r.rms_residual);
        out += ',';
        out += to_string(r.status);
        out += '\n';
    }
    return out;
}

std::string fit_json(const FitResult& fit, const std::string& input_digest,
                     const OutputStamp& stamp) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["config_digest"] = stamp.config_digest;
    j["seed"] = stamp.seed;
    j["input_digest"] = input_digest;
    j["status"] = to_string(fit.status);
    j["t_u"] = fit.t_u;
    j["gamma"] = fit.gamma;
    j["amplitude"] = fit.amplitude;
    j["phi"] = fit.phi;
    j["baseline"] = fit.baseline;
    j["rms_residual"] = fit.rms_residual;
    j["iterations"] = fit.iterations;
    return j.dump(2) + "\n";
}

std::vector<double> read_wa_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<double> wa;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("t,", 0) == 0) continue;  // header
        const auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        wa.push_back(std::stod(line.substr(comma + 1)));
    }
    return wa;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

}  // namespace qcat
