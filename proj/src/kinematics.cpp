#include "meso/kinematics.hpp"

#include <cmath>

namespace meso {

namespace {

Form transport_torsion_rhs(const Form& J, const Form& K, const Form& e, const Form& omega) {
    return covariant_derivative(J, omega) + wedge(K, e);
}

Form transport_curvature_rhs(const Form& K, const Form& omega) {
    return covariant_derivative(K, omega);
}

} // namespace

BianchiResiduals bianchi_residuals(const CosseratState& s) {
    const Grid& g = s.grid();
    if (g.dim == 3) {
        Form dT = covariant_derivative(s.torsion(), s.connection());
        Form first = dT - wedge(s.curvature(), s.coframe());
        Form second = covariant_derivative(s.curvature(), s.connection());
        return {first, second, false};
    }
    if (!s.is_analytic()) {
        // no time data: the degree-3 spatial identities, identically zero in 2D
        return {Form::zero(g, 3, ValueKind::FrameVector), Form::zero(g, 3, ValueKind::SkewMatrix),
                false};
    }
    auto rhs = transport_rhs(s);
    Form first = time_derivative(s.torsion()) - rhs.first;
    Form second = time_derivative(s.curvature()) - rhs.second;
    return {first, second, true};
}

BianchiResiduals bianchi_residuals(const CosseratState& s, const Form& dtT, const Form& dtOm) {
    auto rhs = transport_rhs(s);
    return {dtT - rhs.first, dtOm - rhs.second, true};
}

std::pair<Form, Form> transport_rhs(const CosseratState& s) {
    return {transport_torsion_rhs(s.rate_coframe(), s.rate_connection(), s.coframe(),
                                  s.connection()),
            transport_curvature_rhs(s.rate_connection(), s.connection())};
}

TransportResult integrate_transport(const CosseratState& initial, double dt, int steps,
                                    double tol, bool check, int store_every) {
    if (dt <= 0.0) throw std::invalid_argument("integrate_transport: dt must be positive");
    if (!initial.is_analytic())
        throw std::invalid_argument("integrate_transport: needs analytic rates");
    const Grid& g = initial.grid();
    const double t0 = initial.time();

    auto rates_at = [&](double t) {
        return std::pair<Form, Form>{sample(initial.rate_coframe(), t),
                                     sample(initial.rate_connection(), t)};
    };

    // grid-backed unknowns
    Form e = sample(initial.coframe(), t0, 1);
    Form om = sample(initial.connection(), t0, 1);
    Form T = exterior_derivative(e) + wedge(om, e);
    Form Om = exterior_derivative(om) + wedge(om, om);

    TransportResult res;
    res.trajectory.states.push_back(CosseratState(g, t0, e, om, rates_at(t0).first,
                                                  rates_at(t0).second));
    res.trajectory.times.push_back(t0);

    double gap = 0.0;
    for (int n = 0; n < steps; ++n) {
        double t = t0 + n * dt;
        // classical RK4 on d/dt (e, om, T, Om); the rates are prescribed
        // fields of (x, t), so only the T/Om slots couple to the state.
        auto [J1, K1] = rates_at(t);
        auto [J2, K2] = rates_at(t + 0.5 * dt);
        auto [J4, K4] = rates_at(t + dt);

        Form e2 = e + 0.5 * dt * J1;
        Form om2 = om + 0.5 * dt * K1;
        Form e3 = e + 0.5 * dt * J2;
        Form om3 = om + 0.5 * dt * K2;
        Form e4 = e + dt * J2;  // midpoint rate reused for the k3 state
        Form om4 = om + dt * K2;

        Form kT1 = transport_torsion_rhs(J1, K1, e, om);
        Form kT2 = transport_torsion_rhs(J2, K2, e2, om2);
        Form kT3 = transport_torsion_rhs(J2, K2, e3, om3);
        Form kT4 = transport_torsion_rhs(J4, K4, e4, om4);
        Form kO1 = transport_curvature_rhs(K1, om);
        Form kO2 = transport_curvature_rhs(K2, om2);
        Form kO3 = transport_curvature_rhs(K2, om3);
        Form kO4 = transport_curvature_rhs(K4, om4);

        T = T + (dt / 6.0) * (kT1 + 2.0 * kT2 + 2.0 * kT3 + kT4);
        Om = Om + (dt / 6.0) * (kO1 + 2.0 * kO2 + 2.0 * kO3 + kO4);
        e = e + (dt / 6.0) * (J1 + 4.0 * J2 + J4);
        om = om + (dt / 6.0) * (K1 + 4.0 * K2 + K4);

        double tn = t + dt;
        // the grid forms above were integrated; retag their sample time
        e = Form::grid_samples(g, 1, ValueKind::FrameVector, e.data(), tn);
        om = Form::grid_samples(g, 1, ValueKind::SkewMatrix, om.data(), tn);
        T = Form::grid_samples(g, 2, ValueKind::FrameVector, T.data(), tn);
        Om = Form::grid_samples(g, 2, ValueKind::SkewMatrix, Om.data(), tn);

        Form T_rec = exterior_derivative(e) + wedge(om, e);
        Form Om_rec = exterior_derivative(om) + wedge(om, om);
        gap = std::max(gap, std::max(linf(T_rec - T, tn), linf(Om_rec - Om, tn)));

        if ((n + 1) % store_every == 0 || n + 1 == steps) {
            res.trajectory.states.push_back(
                CosseratState(g, tn, e, om, rates_at(tn).first, rates_at(tn).second));
            res.trajectory.times.push_back(tn);
        }
    }

    res.torsion_transported = T;
    res.curvature_transported = Om;
    res.dual_path_gap = gap;
    if (check && gap > tol)
        throw IntegratorConsistencyError(
            "integrate_transport: transported and recomputed defect fields diverged");
    return res;
}

} // namespace meso
