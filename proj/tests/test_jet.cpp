#include <cmath>

#include "doctest.h"
#include "meso/jet.hpp"

using namespace meso;

TEST_CASE("jet derivatives of a product match closed forms") {
    // f = exp(-t) sin(pi y) * x^2
    double x = 0.7, y = 0.3, t = 0.5;
    const double pi = 3.14159265358979323846;
    Jet X = Jet::variable(x, 0);
    Jet Y = Jet::variable(y, 1);
    Jet T = Jet::variable(t, 3);
    Jet f = exp(-T) * sin(pi * Y) * X * X;

    double base = std::exp(-t) * std::sin(pi * y);
    CHECK(f.value() == doctest::Approx(base * x * x).epsilon(1e-14));
    CHECK(f.d(0) == doctest::Approx(2 * x * base).epsilon(1e-14));
    CHECK(f.d(1) == doctest::Approx(pi * std::exp(-t) * std::cos(pi * y) * x * x).epsilon(1e-14));
    CHECK(f.d(3) == doctest::Approx(-base * x * x).epsilon(1e-14));

    // mixed second partial via deriv chaining
    Jet fx = f.deriv(0);
    CHECK(fx.d(1) ==
          doctest::Approx(2 * x * pi * std::exp(-t) * std::cos(pi * y)).epsilon(1e-13));
    // third derivative exhausts the jet
    Jet fxy = fx.deriv(1);
    CHECK(fxy.order() == 1);
    CHECK(fxy.d(3) ==
          doctest::Approx(-2 * x * pi * std::exp(-t) * std::cos(pi * y)).epsilon(1e-13));
    CHECK_THROWS_AS(fxy.deriv(0).d(0), std::logic_error);
}

TEST_CASE("jet mixed partials commute exactly") {
    Jet X = Jet::variable(0.4, 0);
    Jet Y = Jet::variable(0.9, 1);
    Jet f = sin(2.0 * X * Y) * exp(X - Y);
    Jet fxy = f.deriv(0).deriv(1);
    Jet fyx = f.deriv(1).deriv(0);
    CHECK(fxy.value() == fyx.value()); // bitwise: same table walk
}

TEST_CASE("jet division and sqrt") {
    Jet X = Jet::variable(2.0, 0);
    Jet r = (X * X + 1.0) / X;
    CHECK(r.value() == doctest::Approx(2.5));
    CHECK(r.d(0) == doctest::Approx(1.0 - 1.0 / 4.0)); // d/dx (x + 1/x)
    Jet s = sqrt(X);
    CHECK(s.d(0) == doctest::Approx(0.5 / std::sqrt(2.0)));
}
