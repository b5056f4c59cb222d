#pragma once

#include <array>
#include <optional>
#include <stdexcept>

namespace meso {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Constitutive and dissipative coefficients. The optional anisotropic
/// matrices replace mu_T (torsion excitation) and rho_T (inertia) and must
/// be symmetric positive semidefinite.
struct MaterialParameters {
    double mu_T = 1.0;
    double mu_R = 1.0;
    double rho_T = 1.0;
    double rho_R = 1.0;
    double gamma_T = 1.0;
    double gamma_R = 1.0;
    std::optional<Matrix3> A;       // H_i = A_ij * (*T^j)
    std::optional<Matrix3> rho_ij;  // P_i = rho_ij * (*J^j)

    void validate(bool dissipative_active) const;
};

} // namespace meso
