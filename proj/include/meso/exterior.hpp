#pragma once

#include "meso/form.hpp"
#include "meso/vector_field.hpp"

namespace meso {

/// Graded wedge product with the value-kind composition rules:
/// scalar * anything scales, matrix * vector contracts the frame index,
/// matrix * matrix composes (so-projected; exact for a form wedged with
/// itself, e.g. the connection square in the curvature). Vector * vector
/// and vector * matrix have no canonical composition here and throw;
/// use wedge_dot / wedge_cross for the named variants.
Form wedge(const Form& a, const Form& b);

/// Frame-index contraction  sum_i a^i ^ b^i  -> scalar-valued form.
Form wedge_dot(const Form& a, const Form& b);
/// so-valued contraction of two skew-matrix forms (axial dot product).
Form wedge_so(const Form& a, const Form& b);
/// Cross of two frame-vector values into a skew-matrix form; in 2D the
/// axial scalar a^1 b^2 - a^2 b^1.
Form wedge_cross(const Form& a, const Form& b);

Form exterior_derivative(const Form& a);

/// Euclidean Hodge star for the right-handed orientation with
/// *(dx^dy) = 1 in 2D (so *dx = dy, *dy = -dx) and the standard star in 3D.
Form hodge_star(const Form& a);

Form interior_product(const VectorField& X, const Form& a);

/// Exterior covariant derivative: plain d for scalar values, d + omega-action
/// for frame vectors, d + adjoint action for skew matrices.
Form covariant_derivative(const Form& a, const Form& omega);

/// Covariant Cartan formula  L^D_X a = i_X D a + D i_X a.
Form covariant_lie_derivative(const VectorField& X, const Form& a, const Form& omega);

/// Componentwise Lie derivative  i_X d a + d i_X a  (no connection action).
Form lie_derivative(const VectorField& X, const Form& a);

/// Time derivative (analytic backing only).
Form time_derivative(const Form& a);

/// Pointwise inner product over basis components and internal indices,
/// returned as a scalar 0-form field.
Form pointwise_inner(const Form& a, const Form& b);

} // namespace meso
