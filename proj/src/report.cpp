#include "meso/report.hpp"

#include <cmath>
#include <stdexcept>

namespace meso {

void ResidualReport::add(const std::string& name, double inf, double l2, double tol) {
    checks[name] = CheckResult{inf, l2, tol, inf <= tol, std::nullopt};
}

void ResidualReport::add_info(const std::string& name, double inf, double l2) {
    checks[name] = CheckResult{inf, l2, 0.0, true, std::nullopt};
}

bool ResidualReport::all_pass() const {
    for (const auto& [k, v] : checks)
        if (!v.pass) return false;
    return true;
}

std::vector<std::string> ResidualReport::failing() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : checks)
        if (!v.pass) out.push_back(k);
    return out;
}

void ResidualReport::merge(const ResidualReport& other, const std::string& prefix) {
    for (const auto& [k, v] : other.checks) checks[prefix + k] = v;
}

std::optional<double> richardson_order(const std::vector<double>& norms) {
    if (norms.size() < 3) throw std::invalid_argument("richardson_order: need >= 3 resolutions");
    double worst = 1e300;
    for (std::size_t i = 0; i + 1 < norms.size(); ++i) {
        if (!(norms[i] > norms[i + 1]) || norms[i + 1] <= 0.0) return std::nullopt;
        worst = std::min(worst, std::log2(norms[i] / norms[i + 1]));
    }
    return worst;
}

} // namespace meso
