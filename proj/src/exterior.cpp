#include "meso/exterior.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>

namespace meso {

// ---------------------------------------------------------------------------
// VectorField
// ---------------------------------------------------------------------------

VectorField VectorField::axis(int dim, int a) {
    VectorField v;
    v.dim_ = dim;
    for (int i = 0; i < dim; ++i)
        v.comp_[size_t(i)] = [on = (i == a)](const std::array<Jet, 4>&) {
            return Jet::constant(on ? 1.0 : 0.0);
        };
    return v;
}

VectorField VectorField::rotation(int dim, int a, int b) {
    if (a == b) throw std::invalid_argument("VectorField: degenerate rotation generator");
    VectorField v;
    v.dim_ = dim;
    for (int i = 0; i < dim; ++i)
        v.comp_[size_t(i)] = [i, a, b](const std::array<Jet, 4>& X) {
            // J_ab = X_a E_b - X_b E_a
            if (i == b) return X[size_t(a)];
            if (i == a) return -X[size_t(b)];
            return Jet::constant(0.0);
        };
    return v;
}

VectorField VectorField::zero(int dim) {
    VectorField v;
    v.dim_ = dim;
    for (int i = 0; i < dim; ++i)
        v.comp_[size_t(i)] = [](const std::array<Jet, 4>&) { return Jet::constant(0.0); };
    return v;
}

VectorField VectorField::general(int dim, std::array<CompFn, 3> comps) {
    VectorField v;
    v.dim_ = dim;
    v.comp_ = std::move(comps);
    return v;
}

Jet VectorField::component(int a, const std::array<Jet, 4>& X) const {
    if (a >= dim_ || !comp_[size_t(a)]) return Jet::constant(0.0);
    return comp_[size_t(a)](X);
}

// ---------------------------------------------------------------------------
// Basis tables. A basis element of degree p is sigma * (sorted wedge of the
// axes in mask); the cyclic 2-form basis in 3D is (dydz, dzdx, dxdy).
// ---------------------------------------------------------------------------

namespace {

struct Basis {
    uint8_t mask;
    int8_t sigma;
};

const std::vector<Basis>& bases(int dim, int p) {
    static const std::vector<Basis> b2[4] = {
        {{0, 1}},
        {{1, 1}, {2, 1}},
        {{3, 1}},
        {},
    };
    static const std::vector<Basis> b3[5] = {
        {{0, 1}},
        {{1, 1}, {2, 1}, {4, 1}},
        {{6, 1}, {5, -1}, {3, 1}}, // dydz, dzdx = -(dxdz), dxdy
        {{7, 1}},
        {},
    };
    static const std::vector<Basis> empty;
    if (p < 0) return empty;
    if (dim == 2) return p <= 3 ? b2[p] : empty;
    return p <= 4 ? b3[p] : empty;
}

int merge_sign(uint8_t m1, uint8_t m2) {
    int inv = 0;
    for (int a = 0; a < 3; ++a) {
        if (!(m1 & (1 << a))) continue;
        for (int b = 0; b < a; ++b)
            if (m2 & (1 << b)) ++inv;
    }
    return inv % 2 ? -1 : 1;
}

int find_basis(int dim, int p, uint8_t mask) {
    const auto& bs = bases(dim, p);
    for (int k = 0; k < int(bs.size()); ++k)
        if (bs[size_t(k)].mask == mask) return k;
    return -1;
}

struct WedgeEntry {
    int8_t i, j, k, sign;
};

const std::vector<WedgeEntry>& wedge_table(int dim, int p, int q) {
    static std::map<int, std::vector<WedgeEntry>> cache;
    int key = dim * 100 + p * 10 + q;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<WedgeEntry> tab;
    const auto& bp = bases(dim, p);
    const auto& bq = bases(dim, q);
    for (int i = 0; i < int(bp.size()); ++i)
        for (int j = 0; j < int(bq.size()); ++j) {
            uint8_t m1 = bp[size_t(i)].mask, m2 = bq[size_t(j)].mask;
            if (m1 & m2) continue;
            int k = find_basis(dim, p + q, uint8_t(m1 | m2));
            if (k < 0) continue;
            int s = bp[size_t(i)].sigma * bq[size_t(j)].sigma * merge_sign(m1, m2) *
                    bases(dim, p + q)[size_t(k)].sigma;
            tab.push_back({int8_t(i), int8_t(j), int8_t(k), int8_t(s)});
        }
    return cache.emplace(key, std::move(tab)).first->second;
}

struct HodgeEntry {
    int8_t k, sign;
};

const std::vector<HodgeEntry>& hodge_table(int dim, int p) {
    static std::map<int, std::vector<HodgeEntry>> cache;
    int key = dim * 10 + p;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<HodgeEntry> tab;
    uint8_t full = dim == 2 ? 3 : 7;
    const auto& bp = bases(dim, p);
    const auto& bc = bases(dim, dim - p);
    for (const auto& b : bp) {
        uint8_t mc = full & uint8_t(~b.mask);
        int k = find_basis(dim, dim - p, mc);
        int s = b.sigma * bc[size_t(k)].sigma * merge_sign(b.mask, mc);
        tab.push_back({int8_t(k), int8_t(s)});
    }
    return cache.emplace(key, std::move(tab)).first->second;
}

struct InteriorEntry {
    int8_t axis, bin, bout, sign;
};

const std::vector<InteriorEntry>& interior_table(int dim, int p) {
    static std::map<int, std::vector<InteriorEntry>> cache;
    int key = dim * 10 + p;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<InteriorEntry> tab;
    const auto& bp = bases(dim, p);
    for (int a = 0; a < dim; ++a)
        for (int i = 0; i < int(bp.size()); ++i) {
            uint8_t m = bp[size_t(i)].mask;
            if (!(m & (1 << a))) continue;
            int pos = 0;
            for (int b = 0; b < a; ++b)
                if (m & (1 << b)) ++pos;
            uint8_t mo = m & uint8_t(~(1 << a));
            int k = find_basis(dim, p - 1, mo);
            int s = bp[size_t(i)].sigma * (pos % 2 ? -1 : 1) * bases(dim, p - 1)[size_t(k)].sigma;
            tab.push_back({int8_t(a), int8_t(i), int8_t(k), int8_t(s)});
        }
    return cache.emplace(key, std::move(tab)).first->second;
}

// ---------------------------------------------------------------------------
// Value-kind composition tables: out[vo] += w * a[va] * b[vb].
// ---------------------------------------------------------------------------

struct ValueEntry {
    int8_t va, vb, vo;
    double w;
};

enum class Mode { Compose, Dot, SoDot, Cross };

int eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1; // cyclic sign of (i,j,k)
}

std::vector<ValueEntry> value_table(ValueKind ka, ValueKind kb, Mode mode, int dim,
                                    ValueKind& kout) {
    std::vector<ValueEntry> t;
    auto scalar_scale = [&](int n, bool scalar_first) {
        for (int v = 0; v < n; ++v)
            t.push_back(scalar_first ? ValueEntry{0, int8_t(v), int8_t(v), 1.0}
                                     : ValueEntry{int8_t(v), 0, int8_t(v), 1.0});
    };
    if (mode == Mode::Compose) {
        if (ka == ValueKind::Scalar) {
            kout = kb;
            scalar_scale(value_count(kb, dim), true);
            return t;
        }
        if (kb == ValueKind::Scalar) {
            kout = ka;
            scalar_scale(value_count(ka, dim), false);
            return t;
        }
        if (ka == ValueKind::SkewMatrix && kb == ValueKind::FrameVector) {
            kout = ValueKind::FrameVector;
            if (dim == 2) {
                t.push_back({0, 1, 0, 1.0});  // (m v)^1 = m v^2
                t.push_back({0, 0, 1, -1.0}); // (m v)^2 = -m v^1
            } else {
                // action of the axial matrix m on v: v x m
                for (int o = 0; o < 3; ++o)
                    for (int j = 0; j < 3; ++j)
                        for (int k = 0; k < 3; ++k)
                            if (int e = eps(o, j, k))
                                t.push_back({int8_t(k), int8_t(j), int8_t(o), double(e)});
            }
            return t;
        }
        if (ka == ValueKind::SkewMatrix && kb == ValueKind::SkewMatrix) {
            kout = ValueKind::SkewMatrix;
            if (dim == 3) {
                // so-projected composition: axial -(1/2)(a x b)
                for (int o = 0; o < 3; ++o)
                    for (int j = 0; j < 3; ++j)
                        for (int k = 0; k < 3; ++k)
                            if (int e = eps(o, j, k))
                                t.push_back({int8_t(j), int8_t(k), int8_t(o), -0.5 * e});
            }
            return t; // abelian in 2D
        }
        throw KindMismatchError("wedge: no composition rule for this value-kind pair");
    }
    if (mode == Mode::Dot) {
        if (ka != ValueKind::FrameVector || kb != ValueKind::FrameVector)
            throw KindMismatchError("wedge_dot: frame-vector operands required");
        kout = ValueKind::Scalar;
        for (int v = 0; v < dim; ++v) t.push_back({int8_t(v), int8_t(v), 0, 1.0});
        return t;
    }
    if (mode == Mode::SoDot) {
        if (ka != ValueKind::SkewMatrix || kb != ValueKind::SkewMatrix)
            throw KindMismatchError("wedge_so: skew-matrix operands required");
        kout = ValueKind::Scalar;
        int n = value_count(ValueKind::SkewMatrix, dim);
        for (int v = 0; v < n; ++v) t.push_back({int8_t(v), int8_t(v), 0, 1.0});
        return t;
    }
    // Cross
    if (ka != ValueKind::FrameVector || kb != ValueKind::FrameVector)
        throw KindMismatchError("wedge_cross: frame-vector operands required");
    kout = ValueKind::SkewMatrix;
    if (dim == 2) {
        t.push_back({0, 1, 0, 1.0});
        t.push_back({1, 0, 0, -1.0});
    } else {
        for (int o = 0; o < 3; ++o)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (int e = eps(o, j, k))
                        t.push_back({int8_t(j), int8_t(k), int8_t(o), double(e)});
    }
    return t;
}

// ---------------------------------------------------------------------------
// Generic product over both backings
// ---------------------------------------------------------------------------

void check_same_world(const Form& a, const Form& b, const char* op) {
    if (!a.grid().same_layout(b.grid()))
        throw std::invalid_argument(std::string(op) + ": grid mismatch");
    if (a.is_analytic() != b.is_analytic())
        throw std::invalid_argument(std::string(op) + ": backing mismatch");
}

Form product(const Form& a, const Form& b, Mode mode, const char* op) {
    check_same_world(a, b, op);
    const Grid& g = a.grid();
    ValueKind kout{};
    auto vt = value_table(a.kind(), b.kind(), mode, g.dim, kout);
    int degree = a.degree() + b.degree();
    if (degree > g.dim) return Form::zero(g, std::min(degree, g.dim + 1), kout);
    const auto& wt = wedge_table(g.dim, a.degree(), b.degree());
    int nbo = basis_count(g.dim, degree);
    int nvo = value_count(kout, g.dim);
    if (a.is_analytic()) {
        Form fa = a, fb = b;
        return Form::analytic(g, degree, kout,
                              [fa, fb, &wt, vt, nbo, nvo](const std::array<Jet, 4>& X) {
                                  FormValue va = fa.eval(X);
                                  FormValue vb = fb.eval(X);
                                  FormValue r;
                                  r.nb = nbo;
                                  r.nv = nvo;
                                  for (const auto& w : wt)
                                      for (const auto& v : vt)
                                          r.at(w.k, v.vo) += (double(w.sign) * v.w) *
                                                             (va.at(w.i, v.va) * vb.at(w.j, v.vb));
                                  return r;
                              });
    }
    std::size_t npts = g.points();
    std::vector<double> out(std::size_t(nbo) * nvo * npts, 0.0);
    const auto& da = a.data();
    const auto& db = b.data();
    int nva = a.nv(), nvb = b.nv();
    for (const auto& w : wt)
        for (const auto& v : vt) {
            double s = double(w.sign) * v.w;
            const double* pa = da.data() + (std::size_t(w.i) * nva + v.va) * npts;
            const double* pb = db.data() + (std::size_t(w.j) * nvb + v.vb) * npts;
            double* po = out.data() + (std::size_t(w.k) * nvo + v.vo) * npts;
            for (std::size_t m = 0; m < npts; ++m) po[m] += s * pa[m] * pb[m];
        }
    return Form::grid_samples(g, degree, kout, std::move(out), a.sample_time());
}

// second-order partial derivative of one grid field along an axis
std::vector<double> grid_partial(const Grid& g, const double* f, int axis) {
    std::vector<double> out(g.points(), 0.0);
    double h = g.spacing(axis);
    int N = g.n[axis];
    std::array<int, 3> idx{};
    auto at = [&](int shift) {
        std::array<int, 3> j = idx;
        j[size_t(axis)] += shift;
        if (g.rule[size_t(axis)] == BoundaryRule::Periodic)
            j[size_t(axis)] = (j[size_t(axis)] + N) % N;
        return f[g.index(j[0], j[1], j[2])];
    };
    for (idx[0] = 0; idx[0] < g.n[0]; ++idx[0])
        for (idx[1] = 0; idx[1] < g.n[1]; ++idx[1])
            for (idx[2] = 0; idx[2] < g.n[2]; ++idx[2]) {
                int i = idx[size_t(axis)];
                double v;
                if (g.rule[size_t(axis)] == BoundaryRule::Periodic) {
                    v = (at(1) - at(-1)) / (2 * h);
                } else if (i == 0) {
                    v = (-3 * at(0) + 4 * at(1) - at(2)) / (2 * h);
                } else if (i == N - 1) {
                    v = (3 * at(0) - 4 * at(-1) + at(-2)) / (2 * h);
                } else {
                    v = (at(1) - at(-1)) / (2 * h);
                }
                out[g.index(idx[0], idx[1], idx[2])] = v;
            }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Public operators
// ---------------------------------------------------------------------------

Form wedge(const Form& a, const Form& b) { return product(a, b, Mode::Compose, "wedge"); }
Form wedge_dot(const Form& a, const Form& b) { return product(a, b, Mode::Dot, "wedge_dot"); }
Form wedge_so(const Form& a, const Form& b) { return product(a, b, Mode::SoDot, "wedge_so"); }
Form wedge_cross(const Form& a, const Form& b) {
    return product(a, b, Mode::Cross, "wedge_cross");
}

Form exterior_derivative(const Form& a) {
    const Grid& g = a.grid();
    int p = a.degree();
    if (p >= g.dim) return Form::zero(g, p + 1, a.kind());
    const auto& wt = wedge_table(g.dim, 1, p); // dx_a ^ basis_p
    int nbo = basis_count(g.dim, p + 1);
    int nv = a.nv();
    if (a.is_analytic()) {
        Form fa = a;
        return Form::analytic(g, p + 1, a.kind(),
                              [fa, &wt, nbo, nv](const std::array<Jet, 4>& X) {
                                  FormValue va = fa.eval(X);
                                  FormValue r;
                                  r.nb = nbo;
                                  r.nv = nv;
                                  for (const auto& w : wt)
                                      for (int v = 0; v < nv; ++v)
                                          r.at(w.k, v) += double(w.sign) * va.at(w.j, v).deriv(w.i);
                                  return r;
                              });
    }
    std::size_t npts = g.points();
    std::vector<double> out(std::size_t(nbo) * nv * npts, 0.0);
    const auto& da = a.data();
    for (const auto& w : wt)
        for (int v = 0; v < nv; ++v) {
            const double* src = da.data() + (std::size_t(w.j) * nv + v) * npts;
            std::vector<double> dv = grid_partial(g, src, w.i);
            double* po = out.data() + (std::size_t(w.k) * nv + v) * npts;
            for (std::size_t m = 0; m < npts; ++m) po[m] += double(w.sign) * dv[m];
        }
    return Form::grid_samples(g, p + 1, a.kind(), std::move(out), a.sample_time());
}

Form hodge_star(const Form& a) {
    const Grid& g = a.grid();
    int p = a.degree();
    if (p > g.dim) return Form::zero(g, 0, a.kind());
    const auto& ht = hodge_table(g.dim, p);
    int q = g.dim - p;
    int nv = a.nv();
    int nbo = basis_count(g.dim, q);
    if (a.is_analytic()) {
        Form fa = a;
        return Form::analytic(g, q, a.kind(), [fa, &ht, nbo, nv](const std::array<Jet, 4>& X) {
            FormValue va = fa.eval(X);
            FormValue r;
            r.nb = nbo;
            r.nv = nv;
            for (int i = 0; i < va.nb; ++i)
                for (int v = 0; v < nv; ++v)
                    r.at(ht[size_t(i)].k, v) += double(ht[size_t(i)].sign) * va.at(i, v);
            return r;
        });
    }
    std::size_t npts = g.points();
    std::vector<double> out(std::size_t(nbo) * nv * npts, 0.0);
    const auto& da = a.data();
    for (int i = 0; i < a.nb(); ++i)
        for (int v = 0; v < nv; ++v) {
            const double* src = da.data() + (std::size_t(i) * nv + v) * npts;
            double* po = out.data() + (std::size_t(ht[size_t(i)].k) * nv + v) * npts;
            for (std::size_t m = 0; m < npts; ++m) po[m] += double(ht[size_t(i)].sign) * src[m];
        }
    return Form::grid_samples(g, q, a.kind(), std::move(out), a.sample_time());
}

Form interior_product(const VectorField& X, const Form& a) {
    const Grid& g = a.grid();
    int p = a.degree();
    if (p == 0) throw DegreeError("interior_product: degree-0 input");
    if (p > g.dim) return Form::zero(g, std::max(0, p - 1), a.kind());
    const auto& it = interior_table(g.dim, p);
    int nbo = basis_count(g.dim, p - 1);
    int nv = a.nv();
    if (a.is_analytic()) {
        Form fa = a;
        VectorField Xc = X;
        return Form::analytic(g, p - 1, a.kind(),
                              [fa, Xc, &it, nbo, nv](const std::array<Jet, 4>& X4) {
                                  FormValue va = fa.eval(X4);
                                  FormValue r;
                                  r.nb = nbo;
                                  r.nv = nv;
                                  std::array<Jet, 3> comps;
                                  for (int ax = 0; ax < 3; ++ax)
                                      comps[size_t(ax)] = Xc.component(ax, X4);
                                  for (const auto& e : it)
                                      for (int v = 0; v < nv; ++v)
                                          r.at(e.bout, v) += double(e.sign) *
                                                             (comps[size_t(e.axis)] * va.at(e.bin, v));
                                  return r;
                              });
    }
    std::size_t npts = g.points();
    std::vector<double> out(std::size_t(nbo) * nv * npts, 0.0);
    // evaluate generator components at the nodes
    std::array<std::vector<double>, 3> xc;
    for (int ax = 0; ax < g.dim; ++ax) {
        xc[size_t(ax)].resize(npts);
        for (int ix = 0; ix < g.n[0]; ++ix)
            for (int iy = 0; iy < g.n[1]; ++iy)
                for (int iz = 0; iz < g.n[2]; ++iz) {
                    auto X4 = coord_jets(g, g.coord(0, ix), g.coord(1, iy), g.coord(2, iz),
                                         a.sample_time(), 0);
                    xc[size_t(ax)][g.index(ix, iy, iz)] = X.component(ax, X4).value();
                }
    }
    const auto& da = a.data();
    for (const auto& e : it)
        for (int v = 0; v < nv; ++v) {
            const double* src = da.data() + (std::size_t(e.bin) * nv + v) * npts;
            const double* cx = xc[size_t(e.axis)].data();
            double* po = out.data() + (std::size_t(e.bout) * nv + v) * npts;
            for (std::size_t m = 0; m < npts; ++m) po[m] += double(e.sign) * cx[m] * src[m];
        }
    return Form::grid_samples(g, p - 1, a.kind(), std::move(out), a.sample_time());
}

Form covariant_derivative(const Form& a, const Form& omega) {
    if (omega.kind() != ValueKind::SkewMatrix || omega.degree() != 1)
        throw KindMismatchError("covariant_derivative: connection must be a skew-matrix 1-form");
    Form da = exterior_derivative(a);
    switch (a.kind()) {
        case ValueKind::Scalar: return da;
        case ValueKind::FrameVector: return da + wedge(omega, a);
        case ValueKind::SkewMatrix: return da + 2.0 * wedge(omega, a);
    }
    return da;
}

Form covariant_lie_derivative(const VectorField& X, const Form& a, const Form& omega) {
    Form term1 = interior_product(X, covariant_derivative(a, omega));
    if (a.degree() == 0) return term1; // no i_X a term for 0-forms
    Form term2 = covariant_derivative(interior_product(X, a), omega);
    return term1 + term2;
}

Form lie_derivative(const VectorField& X, const Form& a) {
    Form t1 = a.degree() < a.grid().dim
                  ? interior_product(X, exterior_derivative(a))
                  : Form::zero(a.grid(), a.degree(), a.kind());
    if (a.degree() == 0) return t1;
    Form t2 = exterior_derivative(interior_product(X, a));
    return t1 + t2;
}

Form time_derivative(const Form& a) {
    if (!a.is_analytic())
        throw std::logic_error("time_derivative: grid backing has no time data");
    Form fa = a;
    int nb = a.nb(), nv = a.nv();
    return Form::analytic(a.grid(), a.degree(), a.kind(),
                          [fa, nb, nv](const std::array<Jet, 4>& X) {
                              FormValue va = fa.eval(X);
                              FormValue r;
                              r.nb = nb;
                              r.nv = nv;
                              for (int b = 0; b < nb; ++b)
                                  for (int v = 0; v < nv; ++v) r.at(b, v) = va.at(b, v).deriv(3);
                              return r;
                          });
}

Form pointwise_inner(const Form& a, const Form& b) {
    check_same_world(a, b, "pointwise_inner");
    if (a.degree() != b.degree() || a.kind() != b.kind())
        throw KindMismatchError("pointwise_inner: operands must share degree and kind");
    const Grid& g = a.grid();
    int nb = a.nb(), nv = a.nv();
    if (a.is_analytic()) {
        Form fa = a, fb = b;
        return Form::analytic(g, 0, ValueKind::Scalar,
                              [fa, fb, nb, nv](const std::array<Jet, 4>& X) {
                                  FormValue va = fa.eval(X);
                                  FormValue vb = fb.eval(X);
                                  FormValue r;
                                  r.nb = 1;
                                  r.nv = 1;
                                  for (int i = 0; i < nb; ++i)
                                      for (int v = 0; v < nv; ++v)
                                          r.at(0, 0) += va.at(i, v) * vb.at(i, v);
                                  return r;
                              });
    }
    std::size_t npts = g.points();
    std::vector<double> out(npts, 0.0);
    const auto& da = a.data();
    const auto& db = b.data();
    for (int i = 0; i < nb; ++i)
        for (int v = 0; v < nv; ++v) {
            const double* pa = da.data() + (std::size_t(i) * nv + v) * npts;
            const double* pb = db.data() + (std::size_t(i) * nv + v) * npts;
            for (std::size_t m = 0; m < npts; ++m) out[m] += pa[m] * pb[m];
        }
    return Form::grid_samples(g, 0, ValueKind::Scalar, std::move(out), a.sample_time());
}

} // namespace meso
