#pragma once

#include <memory>

#include "meso/exterior.hpp"
#include "meso/form.hpp"

namespace meso {

/// Field tuple (e, omega, J, K) at one instant, with lazily cached torsion
/// and curvature. States are value-semantic snapshots: "mutation" means
/// building a new state, which starts with a fresh cache.
class CosseratState {
public:
    CosseratState() = default;
    CosseratState(Grid g, double time, Form e, Form omega, Form J, Form K);

    /// Undeformed compatible reference state: e^i = dx^i, omega = 0.
    static CosseratState reference(const Grid& g);

    const Grid& grid() const { return grid_; }
    double time() const { return time_; }
    const Form& coframe() const { return e_; }
    const Form& connection() const { return omega_; }
    const Form& rate_coframe() const { return J_; }
    const Form& rate_connection() const { return K_; }

    /// T = De = de + omega ^ e (cached).
    const Form& torsion() const;
    /// Omega = d omega + omega ^ omega (cached).
    const Form& curvature() const;

    bool is_analytic() const { return e_.is_analytic(); }
    /// Compatible limit: torsion and curvature below tol in the sup norm.
    bool compatible(double tol = 1e-12) const;

    /// Grid-backed snapshot of this state at its own time.
    CosseratState sampled() const;

private:
    struct Cache;
    Grid grid_;
    double time_ = 0.0;
    Form e_, omega_, J_, K_;
    std::shared_ptr<Cache> cache_;
};

} // namespace meso
