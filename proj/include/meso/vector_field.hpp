#pragma once

#include <array>
#include <functional>

#include "meso/jet.hpp"

namespace meso {

/// Material vector field used as a contraction generator. Components are
/// analytic closures so both translation generators (constant) and rotation
/// generators J_AB = X_A E_B - X_B E_A (linear in position) evaluate exactly
/// under either form backing.
class VectorField {
public:
    using CompFn = std::function<Jet(const std::array<Jet, 4>&)>;

    static VectorField axis(int dim, int a);
    static VectorField rotation(int dim, int a, int b);
    static VectorField zero(int dim);
    static VectorField general(int dim, std::array<CompFn, 3> comps);

    int dim() const { return dim_; }
    Jet component(int a, const std::array<Jet, 4>& X) const;

private:
    int dim_ = 2;
    std::array<CompFn, 3> comp_{};
};

} // namespace meso
