#include "meso/constitutive.hpp"

#include <cmath>

namespace meso {

void MaterialParameters::validate(bool dissipative_active) const {
    if (mu_T < 0 || mu_R < 0 || rho_T < 0 || rho_R < 0)
        throw ParameterError("MaterialParameters: moduli and densities must be >= 0");
    if (gamma_T < 0 || gamma_R < 0)
        throw ParameterError("MaterialParameters: defect viscosities must be >= 0");
    if (dissipative_active && (gamma_T <= 0 || gamma_R <= 0))
        throw ParameterError("MaterialParameters: dissipative extension needs gamma > 0");
    auto check_spd = [](const Matrix3& m, const char* what) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (std::abs(m[size_t(i)][size_t(j)] - m[size_t(j)][size_t(i)]) > 1e-14)
                    throw ParameterError(std::string("MaterialParameters: ") + what +
                                         " must be symmetric");
        // principal minors (semidefinite up to roundoff)
        double m00 = m[0][0];
        double m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        double m3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (m00 < -1e-12 || m2 < -1e-12 || m3 < -1e-12)
            throw ParameterError(std::string("MaterialParameters: ") + what +
                                 " must be positive semidefinite");
    };
    if (A) check_spd(*A, "A_ij");
    if (rho_ij) check_spd(*rho_ij, "rho_ij");
}

namespace {

/// Mix frame-vector value components by a constant matrix: out_i = M_ij in_j.
Form apply_value_matrix(const Form& f, const Matrix3& M) {
    if (f.kind() != ValueKind::FrameVector)
        throw KindMismatchError("apply_value_matrix: frame-vector form expected");
    const int nb = f.nb(), nv = f.nv();
    if (f.is_analytic()) {
        Form g = f;
        return Form::analytic(f.grid(), f.degree(), f.kind(),
                              [g, M, nb, nv](const std::array<Jet, 4>& X) {
                                  FormValue in = g.eval(X);
                                  FormValue out;
                                  out.nb = nb;
                                  out.nv = nv;
                                  for (int b = 0; b < nb; ++b)
                                      for (int i = 0; i < nv; ++i)
                                          for (int j = 0; j < nv; ++j)
                                              out.at(b, i) += M[size_t(i)][size_t(j)] * in.at(b, j);
                                  return out;
                              });
    }
    const std::size_t npts = f.grid().points();
    std::vector<double> out(f.data().size(), 0.0);
    for (int b = 0; b < nb; ++b)
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) {
                double w = M[size_t(i)][size_t(j)];
                if (w == 0.0) continue;
                const double* src = f.data().data() + (std::size_t(b) * nv + j) * npts;
                double* dst = out.data() + (std::size_t(b) * nv + i) * npts;
                for (std::size_t m = 0; m < npts; ++m) dst[m] += w * src[m];
            }
    return Form::grid_samples(f.grid(), f.degree(), f.kind(), std::move(out), f.sample_time());
}

} // namespace

std::pair<Form, Form> excitations(const CosseratState& s, const MaterialParameters& p) {
    Form sT = hodge_star(s.torsion());
    Form H = p.A ? apply_value_matrix(sT, *p.A) : p.mu_T * sT;
    Form O = p.mu_R * hodge_star(s.curvature());
    return {H, O};
}

std::pair<Form, Form> momenta(const CosseratState& s, const MaterialParameters& p) {
    Form sJ = hodge_star(s.rate_coframe());
    Form P = p.rho_ij ? apply_value_matrix(sJ, *p.rho_ij) : p.rho_T * sJ;
    Form Q = p.rho_R * hodge_star(s.rate_connection());
    return {P, Q};
}

std::pair<Form, Form> dissipative_currents(const CosseratState& s, const MaterialParameters& p) {
    return {p.gamma_T * s.rate_coframe(), p.gamma_R * s.rate_connection()};
}

Form dissipation_density(const CosseratState& s, const MaterialParameters& p) {
    if (p.gamma_T < 0 || p.gamma_R < 0)
        throw ParameterError("dissipation_density: negative viscosity");
    return p.gamma_T * pointwise_inner(s.rate_coframe(), s.rate_coframe()) +
           p.gamma_R * pointwise_inner(s.rate_connection(), s.rate_connection());
}

Form energy_density(const CosseratState& s, const MaterialParameters& p) {
    return 0.5 * (p.rho_T * pointwise_inner(s.rate_coframe(), s.rate_coframe()) +
                  p.rho_R * pointwise_inner(s.rate_connection(), s.rate_connection()) +
                  p.mu_T * pointwise_inner(s.torsion(), s.torsion()) +
                  p.mu_R * pointwise_inner(s.curvature(), s.curvature()));
}

namespace {

Form as_volume_form(const Form& scalar0) {
    // multiply the 0-form coefficient onto the volume basis form
    const Grid& g = scalar0.grid();
    Form vol = Form::analytic(g, g.dim, ValueKind::Scalar, [](const std::array<Jet, 4>&) {
        FormValue v;
        v.nb = 1;
        v.nv = 1;
        v.at(0, 0) = Jet::constant(1.0);
        return v;
    });
    if (!scalar0.is_analytic()) vol = sample(vol, scalar0.sample_time(), 0);
    return wedge(scalar0, vol);
}

} // namespace

Form potential_density_form(const CosseratState& s, const MaterialParameters& p) {
    Form lamP = 0.5 * (p.mu_T * pointwise_inner(s.torsion(), s.torsion()) +
                       p.mu_R * pointwise_inner(s.curvature(), s.curvature()));
    return as_volume_form(lamP);
}

Form energy_flux(const CosseratState& s, const MaterialParameters& p) {
    auto [H, O] = excitations(s, p);
    return -1.0 * (wedge_dot(s.rate_coframe(), H) + wedge_so(s.rate_connection(), O));
}

Form external_power(const CosseratState& s, const SourceFields& src) {
    return wedge_dot(s.rate_coframe(), src.Sigma) + wedge_so(s.rate_connection(), src.M);
}

Form energy_balance_residual(const CosseratState& s, const MaterialParameters& p,
                             const SourceFields& src, const Form& P_ext_extra,
                             bool include_dissipation) {
    Form dtE = time_derivative(as_volume_form(energy_density(s, p)));
    Form divflux = exterior_derivative(energy_flux(s, p));
    Form resid = dtE + divflux - external_power(s, src) - P_ext_extra;
    if (include_dissipation) resid = resid + as_volume_form(dissipation_density(s, p));
    return resid;
}

Form energy_balance_residual(const Trajectory& traj, std::size_t i, const MaterialParameters& p,
                             const Form& P_ext, bool include_dissipation) {
    if (traj.states.size() < 3 || i == 0 || i + 1 >= traj.states.size())
        throw std::invalid_argument(
            "energy_balance_residual: need >= 3 snapshots and an interior index");
    const CosseratState& prev = traj.states[i - 1];
    const CosseratState& cur = traj.states[i];
    const CosseratState& next = traj.states[i + 1];
    double dt_f = traj.times[i + 1] - traj.times[i];
    double dt_b = traj.times[i] - traj.times[i - 1];
    Form Ep = as_volume_form(energy_density(prev, p));
    Form En = as_volume_form(energy_density(next, p));
    Form dtE = (1.0 / (dt_f + dt_b)) * (En - Ep);
    Form divflux = exterior_derivative(energy_flux(cur, p));
    // power of the induced balance left sides, with time terms differenced
    auto [Pp, Qp] = momenta(prev, p);
    auto [Pn, Qn] = momenta(next, p);
    auto [H, O] = excitations(cur, p);
    Form dtP = (1.0 / (dt_f + dt_b)) * (Pn - Pp);
    Form dtQ = (1.0 / (dt_f + dt_b)) * (Qn - Qp);
    Form Sigma = covariant_derivative(H, cur.connection()) + dtP;
    Form W = (cur.grid().dim == 2 ? 1.0 : -1.0) * wedge_cross(H, cur.coframe());
    Form M = covariant_derivative(O, cur.connection()) + dtQ + W;
    if (include_dissipation) {
        auto [sd, md] = dissipative_currents(cur, p);
        Sigma = Sigma + sd;
        M = M + md;
    }
    Form resid = dtE + divflux - external_power(cur, SourceFields{Sigma, M}) - P_ext;
    if (include_dissipation) resid = resid + as_volume_form(dissipation_density(cur, p));
    return resid;
}

double total_energy(const CosseratState& s, const MaterialParameters& p) {
    Form E = sample(energy_density(s, p), s.time(), 0);
    const Grid& g = s.grid();
    double vol = 1.0;
    for (int a = 0; a < g.dim; ++a) vol *= (g.hi[a] - g.lo[a]);
    double sum = 0.0;
    for (double v : E.data()) sum += v;
    return sum / double(E.data().size()) * vol;
}

} // namespace meso
