#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "meso/state.hpp"

namespace meso {

class IntegratorConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BianchiResiduals {
    Form torsion_law;   // DT - Omega ^ e            (3D) or dtT - DJ - K ^ e (2D pair)
    Form curvature_law; // D Omega                   (3D) or dtOm - DK       (2D pair)
    bool transport_pair = false; // true when the 2D degree-2 consistency pair is returned
};

/// In 3D: the Bianchi identities (DT - Omega^e, D Omega). In 2D those are
/// 3-forms and vanish identically, so the degree-2 transport-consistency
/// pair (dtT - DJ - K^e, dtOm - DK) is returned instead; it needs analytic
/// time derivatives and falls back to the (trivial) spatial residuals on
/// grid backing.
BianchiResiduals bianchi_residuals(const CosseratState& s);

/// Grid-mode 2D variant with externally supplied sampled time derivatives
/// of torsion and curvature.
BianchiResiduals bianchi_residuals(const CosseratState& s, const Form& dtT, const Form& dtOm);

/// Dynamic transport right-hand sides (dtT, dtOm) = (DJ + K ^ e, DK).
std::pair<Form, Form> transport_rhs(const CosseratState& s);

struct Trajectory {
    std::vector<CosseratState> states; // grid-backed snapshots
    std::vector<double> times;
};

struct TransportResult {
    Trajectory trajectory;
    Form torsion_transported;   // torsion evolved by the transport law
    Form curvature_transported; // curvature evolved by the transport law
    double dual_path_gap = 0.0; // max |recomputed - transported| over the run
};

/// Evolve (e, omega) by the prescribed rates of an analytic state with the
/// classical fourth-order one-step method, while independently evolving
/// (T, Omega) by the transport law. The two torsion/curvature paths must
/// agree to tol or an IntegratorConsistencyError is thrown.
TransportResult integrate_transport(const CosseratState& initial, double dt, int steps,
                                    double tol = 1e-8, bool check = true,
                                    int store_every = 1);

} // namespace meso
