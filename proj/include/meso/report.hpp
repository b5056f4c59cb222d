#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace meso {

struct CheckResult {
    double norm_inf = 0.0;
    double norm_l2 = 0.0;
    double tol = 0.0;
    bool pass = true;
    std::optional<double> order; // convergence order when measured
};

/// Named residual norms with pass flags; convergence orders are attached by
/// the refinement driver and require at least three resolutions.
struct ResidualReport {
    std::map<std::string, CheckResult> checks;

    void add(const std::string& name, double inf, double l2, double tol);
    void add_info(const std::string& name, double inf, double l2);
    bool all_pass() const;
    std::vector<std::string> failing() const;
    void merge(const ResidualReport& other, const std::string& prefix = "");
};

/// Richardson order from three or more norms on a halving ladder:
/// order_k = log2(norm_k / norm_{k+1}); returns the minimum order, or
/// nullopt when the sequence is not monotone decreasing.
std::optional<double> richardson_order(const std::vector<double>& norms);

} // namespace meso
