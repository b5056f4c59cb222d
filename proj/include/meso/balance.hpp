#pragma once

#include "meso/constitutive.hpp"
#include "meso/report.hpp"

namespace meso {

class CasePreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Torsion-excitation coupling term of the couple balance, the skew-matrix
/// (n-1)-form W with  H_i ^ (K^i_k ^ e^k) = <K, W>  for every K. That
/// contraction property fixes its sign in both dimensions.
Form torsion_coupling(const Form& H, const Form& e);

/// Balance left sides as manufactured sources:
///   Sigma = DH + dtP (+ gamma_T J),  M = DO + dtQ + W (+ gamma_R K).
/// el_residuals with these sources vanishes identically.
SourceFields induced_sources(const CosseratState& s, const MaterialParameters& p,
                             bool dissipative);

/// Residual norms of the two balances against given sources, reported per
/// frame component ("force.1", ...) and axial component ("couple.1", ...).
/// The 2D reduced couple balance dO + gamma_R K = M of the first worked
/// example is reported alongside as "couple.reduced" so the absorbed
/// e ^ H and dtQ contributions stay visible.
ResidualReport el_residuals(const CosseratState& s, const MaterialParameters& p,
                            const SourceFields& src, bool dissipative, double tol = 1e-10);

enum class SpecialCase { Static, StressFree, Compatible };

/// Reduced balances for the named special case; throws CasePreconditionError
/// when the case's precondition fails (e.g. nonvanishing momenta for the
/// static case).
ResidualReport special_case(const CosseratState& s, const MaterialParameters& p,
                            SpecialCase c, const SourceFields& src, double tol = 1e-10);

struct DispersionResult {
    double predicted_speed = 0.0;
    double measured_speed = 0.0;
    double predicted_decay = 0.0; // gamma_T / (2 rho_T)
    double measured_decay = 0.0;
    double cfl = 0.0;
};

/// 1D periodic leapfrog run of the linearized rate equation
/// rho_T dtt u - mu_T dyy u (+ gamma_T dt u) = 0, measuring the phase speed
/// of mode k (and the amplitude decay rate when dissipative). Throws
/// ParameterError for rho_T = 0 and a stability error with a suggested dt
/// on CFL violation.
DispersionResult dispersion_check(const MaterialParameters& p, double k, int points = 256,
                                  bool dissipative = false, double cfl = 0.5,
                                  double dt_override = 0.0);

} // namespace meso
