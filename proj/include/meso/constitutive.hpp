#pragma once

#include <utility>

#include "meso/kinematics.hpp"
#include "meso/material.hpp"
#include "meso/state.hpp"

namespace meso {

/// Defect excitations: H_i = mu_T *T^i (or A_ij *T^j), O = mu_R *Omega.
/// (n-2)-forms: 0-forms in 2D, 1-forms in 3D.
std::pair<Form, Form> excitations(const CosseratState& s, const MaterialParameters& p);

/// Momenta: P = rho_T *J (or rho_ij *J^j), Q = rho_R *K.  (n-1)-forms.
std::pair<Form, Form> momenta(const CosseratState& s, const MaterialParameters& p);

/// Linear dissipative currents (gamma_T J, gamma_R K).
std::pair<Form, Form> dissipative_currents(const CosseratState& s, const MaterialParameters& p);

/// Pointwise dissipation density gamma_T <J,J> + gamma_R <K,K> >= 0.
Form dissipation_density(const CosseratState& s, const MaterialParameters& p);

/// Pointwise energy density
/// E = 1/2 (rho_T <J,J> + rho_R <K,K> + mu_T <T,T> + mu_R <Omega,Omega>).
Form energy_density(const CosseratState& s, const MaterialParameters& p);

/// Potential part 1/2 (mu_T <T,T> + mu_R <Omega,Omega>) as an n-form (the
/// Lagrangian density entering the configurational currents).
Form potential_density_form(const CosseratState& s, const MaterialParameters& p);

/// Energy flux (n-1)-form  F_E = -(J^i ^ H_i + <K, O>)  whose exterior
/// derivative is the divergence term of the energy balance.
Form energy_flux(const CosseratState& s, const MaterialParameters& p);

struct SourceFields {
    Form Sigma; // frame-vector (n-1)-form
    Form M;     // skew-matrix (n-1)-form
};

/// External power density n-form  P_ext = J^i ^ Sigma_i + <K, M>.
Form external_power(const CosseratState& s, const SourceFields& src);

/// Pointwise residual of the energy balance  dtE + D - P_ext + R  evaluated
/// analytically (exact for gamma = 0 manufactured sources).
Form energy_balance_residual(const CosseratState& s, const MaterialParameters& p,
                             const SourceFields& src, const Form& P_ext_extra,
                             bool include_dissipation);

/// Trajectory version: central time difference of the sampled energy at
/// snapshot i, grid divergence of the flux, pointwise residual field.
/// Needs at least 3 snapshots.
Form energy_balance_residual(const Trajectory& traj, std::size_t i, const MaterialParameters& p,
                             const Form& P_ext, bool include_dissipation);

/// Domain integral of the energy density of one state (trapezoid-free plain
/// node mean times volume; deterministic).
double total_energy(const CosseratState& s, const MaterialParameters& p);

} // namespace meso
