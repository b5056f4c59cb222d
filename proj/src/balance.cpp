#include "meso/balance.hpp"

namespace meso {

Form torsion_coupling(const Form& H, const Form& e) {
    double sign = e.grid().dim == 2 ? 1.0 : -1.0;
    return sign * wedge_cross(H, e);
}

SourceFields induced_sources(const CosseratState& s, const MaterialParameters& p,
                             bool dissipative) {
    auto [H, O] = excitations(s, p);
    auto [P, Q] = momenta(s, p);
    Form dtP = s.is_analytic() ? time_derivative(P) : Form::zero(s.grid(), P.degree(), P.kind());
    Form dtQ = s.is_analytic() ? time_derivative(Q) : Form::zero(s.grid(), Q.degree(), Q.kind());
    if (!s.is_analytic()) {
        dtP = sample(dtP, s.time(), 0);
        dtQ = sample(dtQ, s.time(), 0);
    }
    Form Sigma = covariant_derivative(H, s.connection()) + dtP;
    Form M = covariant_derivative(O, s.connection()) + dtQ + torsion_coupling(H, s.coframe());
    if (dissipative) {
        p.validate(true);
        auto [sd, md] = dissipative_currents(s, p);
        Sigma = Sigma + sd;
        M = M + md;
    }
    return {Sigma, M};
}

namespace {

/// Per-component sup/l2 norms of a form's value slots.
std::vector<Norms> component_norms(const Form& f, double t) {
    Form g = sample(f, t, 0);
    const Grid& gr = g.grid();
    std::size_t npts = gr.points();
    double vol = 1.0;
    for (int a = 0; a < gr.dim; ++a) vol *= (gr.hi[a] - gr.lo[a]);
    std::vector<Norms> out(std::size_t(g.nv()));
    for (int v = 0; v < g.nv(); ++v) {
        double inf = 0.0, ss = 0.0;
        std::size_t cnt = 0;
        for (int b = 0; b < g.nb(); ++b) {
            const double* src = g.data().data() + (std::size_t(b) * g.nv() + v) * npts;
            for (std::size_t m = 0; m < npts; ++m) {
                inf = std::max(inf, std::abs(src[m]));
                ss += src[m] * src[m];
                ++cnt;
            }
        }
        out[size_t(v)] = {inf, cnt ? std::sqrt(ss / double(cnt) * vol) : 0.0};
    }
    return out;
}

} // namespace

ResidualReport el_residuals(const CosseratState& s, const MaterialParameters& p,
                            const SourceFields& src, bool dissipative, double tol) {
    SourceFields lhs = induced_sources(s, p, dissipative);
    Form force = lhs.Sigma - src.Sigma;
    Form couple = lhs.M - src.M;
    ResidualReport rep;
    auto fn = component_norms(force, s.time());
    for (std::size_t v = 0; v < fn.size(); ++v)
        rep.add("force." + std::to_string(v + 1), fn[v].inf, fn[v].l2, tol);
    auto cn = component_norms(couple, s.time());
    for (std::size_t v = 0; v < cn.size(); ++v)
        rep.add("couple." + std::to_string(v + 1), cn[v].inf, cn[v].l2, tol);
    if (s.grid().dim == 2) {
        // reduced 2D couple balance dO + gamma_R K = M (e^H and dtQ absorbed)
        auto [H, O] = excitations(s, p);
        Form reduced = exterior_derivative(O) + p.gamma_R * s.rate_connection() - src.M;
        Norms rn = norms(reduced, s.time());
        rep.add_info("couple.reduced", rn.inf, rn.l2);
    }
    return rep;
}

ResidualReport special_case(const CosseratState& s, const MaterialParameters& p,
                            SpecialCase c, const SourceFields& src, double tol) {
    ResidualReport rep;
    auto [H, O] = excitations(s, p);
    auto [P, Q] = momenta(s, p);
    const double pre_tol = 1e-10;
    switch (c) {
        case SpecialCase::Static: {
            if (linf(P, s.time()) > pre_tol || linf(Q, s.time()) > pre_tol)
                throw CasePreconditionError("special_case: static case needs vanishing momenta");
            Form force = covariant_derivative(H, s.connection()) - src.Sigma;
            Form couple = covariant_derivative(O, s.connection()) +
                          torsion_coupling(H, s.coframe()) - src.M;
            Norms nf = norms(force, s.time()), nc = norms(couple, s.time());
            rep.add("static.force", nf.inf, nf.l2, tol);
            rep.add("static.couple", nc.inf, nc.l2, tol);
            break;
        }
        case SpecialCase::StressFree: {
            SourceFields lhs = induced_sources(s, p, false);
            Norms nf = norms(lhs.Sigma, s.time()), nc = norms(lhs.M, s.time());
            rep.add("stressfree.force", nf.inf, nf.l2, tol);
            rep.add("stressfree.couple", nc.inf, nc.l2, tol);
            rep.add_info("stressfree.H_norm", linf(H, s.time()), 0.0);
            break;
        }
        case SpecialCase::Compatible: {
            if (!s.compatible(pre_tol))
                throw CasePreconditionError(
                    "special_case: compatible case needs vanishing defect measures");
            Norms nh = norms(H, s.time()), no = norms(O, s.time());
            rep.add("compatible.H", nh.inf, nh.l2, tol);
            rep.add("compatible.O", no.inf, no.l2, tol);
            // classical balances: dtP = Sigma, dtQ = M
            Form dtP = s.is_analytic() ? time_derivative(P) : Form::zero(s.grid(), P.degree(), P.kind());
            Form dtQ = s.is_analytic() ? time_derivative(Q) : Form::zero(s.grid(), Q.degree(), Q.kind());
            Norms nf = norms(dtP - src.Sigma, s.time());
            Norms nc = norms(dtQ - src.M, s.time());
            rep.add("compatible.force", nf.inf, nf.l2, tol);
            rep.add("compatible.couple", nc.inf, nc.l2, tol);
            break;
        }
    }
    return rep;
}

} // namespace meso
