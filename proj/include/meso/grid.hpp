#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace meso {

enum class BoundaryRule : uint8_t { OneSided, Periodic };

/// Structured collocated grid on an axis-aligned box, 2D or 3D.
/// Spacing is (hi-lo)/(n-1) for one-sided axes and (hi-lo)/n for periodic
/// axes (the right endpoint is the wrapped image of the left one).
struct Grid {
    int dim = 2;
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
    std::array<int, 3> n{33, 33, 1};
    std::array<BoundaryRule, 3> rule{BoundaryRule::OneSided, BoundaryRule::OneSided,
                                     BoundaryRule::OneSided};

    static Grid square(int points, BoundaryRule r = BoundaryRule::OneSided);
    static Grid cube(int points, BoundaryRule r = BoundaryRule::OneSided);

    void validate() const;

    double spacing(int axis) const;
    double coord(int axis, int i) const;
    std::size_t points() const;
    std::size_t index(int ix, int iy, int iz = 0) const;
    bool same_layout(const Grid& o) const;
};

} // namespace meso
