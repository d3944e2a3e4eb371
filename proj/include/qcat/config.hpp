#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcat {

// Flat key=value configuration: one `key = value` pair per line, '#' starts
// a comment. CLI flags override file values. Keys are kept sorted so the
// canonical form (and its digest) is independent of input order.
class Config {
  public:
    Config() = default;

    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    std::string get(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    uint64_t get_uint64(const std::string& key, uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;
    std::vector<int> get_int_list(const std::string& key, const std::vector<int>& fallback) const;

    // canonical "key = value" lines, sorted by key
    std::string canonical() const;
    // FNV-1a 64 of the canonical form, hex
    std::string digest() const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcat
