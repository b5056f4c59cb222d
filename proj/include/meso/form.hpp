#pragma once

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "meso/grid.hpp"
#include "meso/jet.hpp"

namespace meso {

/// Value carried by a form at a point: scalar, frame vector (one component
/// per spatial axis), or so(n) matrix stored by its axial part (3 components
/// in 3D, a single component in 2D). Axial storage makes antisymmetry a
/// structural property instead of an invariant to police.
enum class ValueKind : uint8_t { Scalar, FrameVector, SkewMatrix };

int value_count(ValueKind k, int dim);
int basis_count(int dim, int degree);
/// Human-readable label of a basis p-form ("1", "dx", "dzdx", ...).
const char* basis_label(int dim, int degree, int b);

/// All components of a form at one point: c[basis][value].
template <class S>
struct Components {
    int nb = 0, nv = 0;
    std::array<std::array<S, 3>, 3> c{};
    S& at(int b, int v) { return c[size_t(b)][size_t(v)]; }
    const S& at(int b, int v) const { return c[size_t(b)][size_t(v)]; }
};

using FormValue = Components<Jet>;

class KindMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A differential p-form with one of two interchangeable backings:
///  - analytic: a closure evaluating all components as order-3 jets at a
///    spacetime point, so derived operators stay exact;
///  - grid: component samples on the grid at a fixed time, with derivative
///    operators realized by second-order stencils.
/// Forms are immutable; operators return new forms.
class Form {
public:
    using AnalyticFn = std::function<FormValue(const std::array<Jet, 4>&)>;

    Form() = default;
    static Form analytic(const Grid& g, int degree, ValueKind k, AnalyticFn fn);
    static Form zero(const Grid& g, int degree, ValueKind k);
    static Form grid_samples(const Grid& g, int degree, ValueKind k,
                             std::vector<double> data, double time);

    bool valid() const { return p_ != nullptr; }
    bool is_analytic() const;
    const Grid& grid() const;
    int degree() const;
    ValueKind kind() const;
    int nb() const;
    int nv() const;
    double sample_time() const;

    /// Evaluate an analytic form at seeded coordinate jets.
    FormValue eval(const std::array<Jet, 4>& X) const;
    /// Component jets at a point (analytic backing).
    FormValue eval_at(double x, double y, double z, double t, int order = Jet::kOrder) const;
    /// One coefficient value at a point (analytic backing).
    double coeff_at(double x, double y, double z, double t, int b, int v) const;

    /// Grid-backed node access, layout (b*nv + v)*npts + node.
    const std::vector<double>& data() const;
    double node(int b, int v, std::size_t idx) const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    friend Form operator*(double s, const Form& f);

private:
    struct Impl;
    std::shared_ptr<const Impl> p_;
    const Impl& impl() const;
};

/// Seeded coordinate jets for a point; in 2D the z slot stays constant.
std::array<Jet, 4> coord_jets(const Grid& g, double x, double y, double z, double t,
                              int order = Jet::kOrder);

/// Sample an analytic form onto the grid at time t (jet order `order`;
/// order 0 is a plain value sweep).
Form sample(const Form& f, double t, int order = 0);

struct Norms {
    double inf = 0.0;
    double l2 = 0.0;
};

/// Norms over grid nodes: max |coefficient| and an RMS-style L2
/// sqrt(mean of squares * domain volume). Analytic forms are sampled at t.
Norms norms(const Form& f, double t);
double linf(const Form& f, double t);

} // namespace meso
