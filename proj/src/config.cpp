#include "qcat/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcat {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

Config Config::from_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        }
        cfg.entries_[key] = value;
    }
    return cfg;
}

void Config::set(const std::string& key, const std::string& value) { entries_[key] = value; }

bool Config::has(const std::string& key) const { return entries_.count(key) != 0; }

std::string Config::get(const std::string& key, const std::string& fallback) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("config key '" + key + "': not a number: " + it->second);
    }
}

int Config::get_int(const std::string& key, int fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("config key '" + key + "': not an integer: " + it->second);
    }
}

uint64_t Config::get_uint64(const std::string& key, uint64_t fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const uint64_t v = std::stoull(it->second, &pos);
        if (pos != it->second.size()) throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("config key '" + key + "': not an unsigned integer: " + it->second);
    }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config key '" + key + "': not a boolean: " + v);
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : value) {
        if (ch == ',') {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    cur = trim(cur);
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

}  // namespace

std::vector<double> Config::get_double_list(const std::string& key,
                                            const std::vector<double>& fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    std::vector<double> out;
    for (const auto& part : split_list(it->second)) {
        try {
            out.push_back(std::stod(part));
        } catch (...) {
            throw ConfigError("config key '" + key + "': bad list element: " + part);
        }
    }
    return out;
}

std::vector<int> Config::get_int_list(const std::string& key,
                                      const std::vector<int>& fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    std::vector<int> out;
    for (const auto& part : split_list(it->second)) {
        try {
            out.push_back(std::stoi(part));
        } catch (...) {
            throw ConfigError("config key '" + key + "': bad list element: " + part);
        }
    }
    return out;
}

std::string Config::canonical() const {
    std::string out;
    for (const auto& [k, v] : entries_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

std::string Config::digest() const {
    // FNV-1a 64
    uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : canonical()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qcat
