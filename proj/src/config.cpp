#include "meso/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace meso {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: missing '=' on line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config: empty key on line " + std::to_string(lineno));
        cfg.kv_[key] = val;
    }
    return cfg;
}

bool KeyValueConfig::has(const std::string& key) const { return kv_.count(key) > 0; }

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        std::size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for " + key + ": " + it->second);
    }
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
    double v = get_double(key, double(fallback));
    int i = int(v);
    if (double(i) != v) throw ConfigError("config: integer expected for " + key);
    return i;
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) { kv_[key] = value; }

void KeyValueConfig::check_schema(const std::vector<std::string>& known) const {
    for (const auto& [k, v] : kv_) {
        bool ok = std::find(known.begin(), known.end(), k) != known.end();
        if (!ok && k.rfind("tol.", 0) == 0) ok = true; // tolerance overrides are open-ended
        if (!ok) throw ConfigError("config: unknown key '" + k + "'");
    }
}

double RunConfig::tol(const std::string& check, double fallback) const {
    auto it = tolerances.find(check);
    return it == tolerances.end() ? fallback : it->second;
}

const std::vector<std::string>& RunConfig::schema() {
    static const std::vector<std::string> keys = {
        "scenario.name", "scenario.a0",    "scenario.eps",  "scenario.seed",
        "grid.n",        "grid.levels",    "time.t0",       "time.t_end",
        "time.dt",       "output.dir",     "output.format", "verify.only",
        "material.mu_T", "material.mu_R",  "material.rho_T", "material.rho_R",
        "material.gamma_T", "material.gamma_R",
    };
    return keys;
}

RunConfig RunConfig::from_config(const KeyValueConfig& cfg) {
    cfg.check_schema(schema());
    RunConfig rc;
    rc.scenario = cfg.get_string("scenario.name", rc.scenario);
    rc.a0 = cfg.get_double("scenario.a0", rc.a0);
    rc.eps = cfg.get_double("scenario.eps", rc.eps);
    rc.seed = uint64_t(cfg.get_int("scenario.seed", int(rc.seed)));
    rc.grid = cfg.get_int("grid.n", rc.grid);
    std::string levels = cfg.get_string("grid.levels", "");
    if (!levels.empty()) {
        rc.resolutions.clear();
        std::istringstream ss(levels);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) rc.resolutions.push_back(std::stoi(tok));
    }
    rc.t0 = cfg.get_double("time.t0", rc.t0);
    rc.t_end = cfg.get_double("time.t_end", rc.t_end);
    rc.dt = cfg.get_double("time.dt", rc.dt);
    rc.out_dir = cfg.get_string("output.dir", rc.out_dir);
    rc.format = cfg.get_string("output.format", rc.format);
    rc.only = cfg.get_string("verify.only", rc.only);
    rc.material.mu_T = cfg.get_double("material.mu_T", rc.material.mu_T);
    rc.material.mu_R = cfg.get_double("material.mu_R", rc.material.mu_R);
    rc.material.rho_T = cfg.get_double("material.rho_T", rc.material.rho_T);
    rc.material.rho_R = cfg.get_double("material.rho_R", rc.material.rho_R);
    rc.material.gamma_T = cfg.get_double("material.gamma_T", rc.material.gamma_T);
    rc.material.gamma_R = cfg.get_double("material.gamma_R", rc.material.gamma_R);
    for (const auto& [k, v] : cfg.entries())
        if (k.rfind("tol.", 0) == 0) rc.tolerances[k.substr(4)] = cfg.get_double(k, 0.0);
    rc.validate();
    return rc;
}

void RunConfig::validate() const {
    if (grid < 3) throw ConfigError("config: grid.n must be >= 3");
    if (dt <= 0.0) throw ConfigError("config: time.dt must be positive");
    if (t_end < t0) throw ConfigError("config: time window is empty");
    if (resolutions.size() >= 1) {
        for (std::size_t i = 1; i < resolutions.size(); ++i)
            if (resolutions[i] <= resolutions[i - 1])
                throw ConfigError("config: grid.levels must be strictly increasing");
    }
    if (format != "csv" && format != "json" && format != "both")
        throw ConfigError("config: output.format must be csv, json or both");
    material.validate(false);
}

} // namespace meso
