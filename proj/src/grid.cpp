#include "meso/grid.hpp"

#include <stdexcept>

namespace meso {

Grid Grid::square(int points, BoundaryRule r) {
    Grid g;
    g.dim = 2;
    g.n = {points, points, 1};
    g.rule = {r, r, BoundaryRule::OneSided};
    g.validate();
    return g;
}

Grid Grid::cube(int points, BoundaryRule r) {
    Grid g;
    g.dim = 3;
    g.n = {points, points, points};
    g.rule = {r, r, r};
    g.validate();
    return g;
}

void Grid::validate() const {
    if (dim != 2 && dim != 3) throw std::invalid_argument("Grid: dimension must be 2 or 3");
    for (int a = 0; a < dim; ++a) {
        if (n[a] < 3) throw std::invalid_argument("Grid: need at least 3 points per axis");
        if (hi[a] <= lo[a]) throw std::invalid_argument("Grid: empty extent");
    }
    if (dim == 2 && n[2] != 1) throw std::invalid_argument("Grid: 2D grid must have n_z = 1");
}

double Grid::spacing(int axis) const {
    double ext = hi[axis] - lo[axis];
    return rule[axis] == BoundaryRule::Periodic ? ext / n[axis] : ext / (n[axis] - 1);
}

double Grid::coord(int axis, int i) const { return lo[axis] + spacing(axis) * i; }

std::size_t Grid::points() const {
    return std::size_t(n[0]) * std::size_t(n[1]) * std::size_t(n[2]);
}

std::size_t Grid::index(int ix, int iy, int iz) const {
    return (std::size_t(ix) * n[1] + iy) * n[2] + iz;
}

bool Grid::same_layout(const Grid& o) const {
    if (dim != o.dim) return false;
    for (int a = 0; a < 3; ++a)
        if (n[a] != o.n[a] || lo[a] != o.lo[a] || hi[a] != o.hi[a] || rule[a] != o.rule[a])
            return false;
    return true;
}

} // namespace meso
