#include "meso/state.hpp"

#include <optional>

namespace meso {

struct CosseratState::Cache {
    std::optional<Form> T;
    std::optional<Form> Om;
};

CosseratState::CosseratState(Grid g, double time, Form e, Form omega, Form J, Form K)
    : grid_(g), time_(time), e_(std::move(e)), omega_(std::move(omega)), J_(std::move(J)),
      K_(std::move(K)), cache_(std::make_shared<Cache>()) {
    if (e_.kind() != ValueKind::FrameVector || e_.degree() != 1)
        throw KindMismatchError("CosseratState: coframe must be a frame-vector 1-form");
    if (omega_.kind() != ValueKind::SkewMatrix || omega_.degree() != 1)
        throw KindMismatchError("CosseratState: connection must be a skew-matrix 1-form");
}

CosseratState CosseratState::reference(const Grid& g) {
    int dim = g.dim;
    Form e = Form::analytic(g, 1, ValueKind::FrameVector, [dim](const std::array<Jet, 4>&) {
        FormValue v;
        v.nb = dim;
        v.nv = dim;
        for (int i = 0; i < dim; ++i) v.at(i, i) = Jet::constant(1.0);
        return v;
    });
    Form omega = Form::zero(g, 1, ValueKind::SkewMatrix);
    Form J = Form::zero(g, 1, ValueKind::FrameVector);
    Form K = Form::zero(g, 1, ValueKind::SkewMatrix);
    return CosseratState(g, 0.0, e, omega, J, K);
}

const Form& CosseratState::torsion() const {
    if (!cache_->T) cache_->T = covariant_derivative(e_, omega_);
    return *cache_->T;
}

const Form& CosseratState::curvature() const {
    if (!cache_->Om) cache_->Om = exterior_derivative(omega_) + wedge(omega_, omega_);
    return *cache_->Om;
}

bool CosseratState::compatible(double tol) const {
    return linf(torsion(), time_) < tol && linf(curvature(), time_) < tol;
}

CosseratState CosseratState::sampled() const {
    if (!is_analytic()) return *this;
    return CosseratState(grid_, time_, sample(e_, time_), sample(omega_, time_),
                         sample(J_, time_), sample(K_, time_));
}

} // namespace meso
