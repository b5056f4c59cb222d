#pragma once

#include <cstdint>
#include <vector>

#include "meso/configurational.hpp"

namespace meso {

/// Planar strip with identity coframe and the scalar micro-rotation
/// connection omega = a(y,t) dx, a = exp(-t) sin(pi y). Rates derived by
/// exact time differentiation.
CosseratState example1(const Grid& g, double t);

/// Time-dependent coframe e1 = (1 + eps exp(-t) sin(pi y)) dx, e2 = dy and
/// connection omega = a0 exp(-t) cos(pi y) dx.
CosseratState example2(const Grid& g, double t, double a0 = 1.0, double eps = 0.1);

/// Seeded random analytic state: near-identity coframe and small connection
/// built from low-frequency trigonometric terms in all coordinates and time.
CosseratState manufactured_random(const Grid& g, double t, uint64_t seed);

/// Stress-free standing wave: e1 = b(y,t) dx with rho b_tt = mu b_yy,
/// omega = 0. The conservative force balance holds exactly with zero
/// sources while the torsion excitation H stays nonzero.
CosseratState manufactured_wave(const Grid& g, double t, double mu_T, double rho_T,
                                int mode = 1);

/// Scalar reduction of a 2D state: torsion and curvature area coefficients
/// and the dy-component of the induced force stress of frame index 1.
struct ScalarReduction {
    Form tau;     // 0-form, T^1 = tau dx^dy
    Form kappa;   // 0-form, Omega = kappa dx^dy
    Form sigma_y; // 0-form, Sigma_1 = sigma_y dy
};
ScalarReduction scalar_reduction(const CosseratState& s, const MaterialParameters& p);

struct AppendixRow {
    double y = 0.0;
    double a = 0.0;
    double omega = 0.0;
    double F_closed = 0.0;
    double F_oracle = 0.0;
    // printed values, present only for the published rows
    bool has_paper = false;
    double paper_a = 0.0;
    double paper_omega = 0.0;
    double paper_F = 0.0;
    double F_discrepancy = 0.0; // |F_closed - paper_F| when present
    bool discrepancy = false;
};

/// Selected-value table of the first worked example at time t: the
/// connection amplitude, curvature coefficient, and configurational force
/// from both the closed form (pi/2) exp(-2t) sin(2 pi y) and the
/// translational-source oracle. Published rows carry a side-by-side
/// discrepancy column rather than being forced to agree.
std::vector<AppendixRow> appendix_table(double t, const std::vector<double>& ys,
                                        const MaterialParameters& p);

} // namespace meso
