#pragma once

#include <array>
#include <cstdint>

namespace meso {

/// Truncated multivariate Taylor jet in the variables (x, y, z, t), carrying
/// all partial derivatives up to third order. Arithmetic on jets propagates
/// derivatives exactly, so analytic-backed fields satisfy identities like
/// d(d(f)) = 0 to machine precision rather than to a stencil error.
///
/// Coefficients are stored as Taylor coefficients (derivative / multi-index
/// factorial) about the evaluation point. `order()` tracks how many
/// derivative orders are still valid: differentiating consumes one order,
/// and reading a coefficient beyond the valid order is a logic error.
class Jet {
public:
    static constexpr int kVars = 4;   // x, y, z, t
    static constexpr int kOrder = 3;
    static constexpr int kTerms = 35; // multi-indices with |alpha| <= 3

    Jet();
    static Jet constant(double v);
    /// Seeded coordinate jet: value v, unit first derivative along `var`.
    static Jet variable(double v, int var, int order = kOrder);

    double value() const;
    /// First partial derivative with respect to variable `var`.
    double d(int var) const;
    int order() const { return ord_; }
    Jet truncated(int order) const;

    /// Derivative jet with respect to `var`; one order shallower.
    Jet deriv(int var) const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator*(double s, const Jet& a);
    friend Jet operator*(const Jet& a, double s);
    friend Jet operator+(const Jet& a, double s);
    friend Jet operator+(double s, const Jet& a);
    friend Jet operator-(const Jet& a, double s);
    friend Jet operator-(double s, const Jet& a);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, double s);

    friend Jet sin(const Jet& g);
    friend Jet cos(const Jet& g);
    friend Jet exp(const Jet& g);
    friend Jet sqrt(const Jet& g);

    /// Composition with a scalar function given its value and first three
    /// derivatives at the jet's base point.
    static Jet compose(const Jet& g, double f0, double f1, double f2, double f3);

private:
    std::array<double, kTerms> c_;
    int ord_;
};

} // namespace meso
