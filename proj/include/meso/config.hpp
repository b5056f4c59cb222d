#pragma once

#include <map>
#include <string>
#include <vector>

#include "meso/material.hpp"

namespace meso {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat key = value configuration with dotted section keys, '#' comments and
/// strict unknown-key rejection against a registered schema.
class KeyValueConfig {
public:
    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_text(const std::string& text);

    bool has(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    void set(const std::string& key, const std::string& value);

    /// Throws ConfigError when a key is not in the schema list.
    void check_schema(const std::vector<std::string>& known) const;
    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

struct RunConfig {
    std::string scenario = "example1";
    double a0 = 1.0;   // second example coframe amplitude
    double eps = 0.1;  // second example perturbation
    uint64_t seed = 2024;
    int grid = 33;
    std::vector<int> resolutions{33, 65, 129};
    double t0 = 0.0;
    double t_end = 1.0;
    double dt = 1e-3;
    std::string out_dir = "out";
    std::string format = "csv"; // csv | json | both
    std::string only;           // verify check filter (substring)
    MaterialParameters material;
    std::map<std::string, double> tolerances;

    double tol(const std::string& check, double fallback) const;
    static const std::vector<std::string>& schema();
    static RunConfig from_config(const KeyValueConfig& cfg);
    void validate() const;
};

} // namespace meso
