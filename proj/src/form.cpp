#include "meso/form.hpp"

#include <cmath>
#include <cstdint>

namespace meso {

int value_count(ValueKind k, int dim) {
    switch (k) {
        case ValueKind::Scalar: return 1;
        case ValueKind::FrameVector: return dim;
        case ValueKind::SkewMatrix: return dim == 2 ? 1 : 3;
    }
    return 0;
}

int basis_count(int dim, int degree) {
    if (degree < 0 || degree > dim) return 0;
    if (degree == 0 || degree == dim) return 1;
    if (degree == 1 || degree == dim - 1) return dim;
    return 0; // dim <= 3
}

namespace {

const char* kLabels2[3][2] = {{"1"}, {"dx", "dy"}, {"dxdy"}};
const char* kLabels3[4][3] = {{"1"}, {"dx", "dy", "dz"}, {"dydz", "dzdx", "dxdy"}, {"dxdydz"}};

} // namespace

const char* basis_label(int dim, int degree, int b) {
    if (dim == 2) return kLabels2[degree][b];
    return kLabels3[degree][b];
}

struct Form::Impl {
    Grid grid;
    int degree = 0;
    ValueKind kind = ValueKind::Scalar;
    int nb = 0, nv = 0;
    bool analytic = true;
    AnalyticFn fn;
    std::vector<double> data;
    double time = 0.0;
};

const Form::Impl& Form::impl() const {
    if (!p_) throw std::logic_error("Form: empty handle");
    return *p_;
}

Form Form::analytic(const Grid& g, int degree, ValueKind k, AnalyticFn fn) {
    if (degree < 0 || degree > g.dim + 1)
        throw DegreeError("Form: degree out of range");
    auto impl = std::make_shared<Impl>();
    impl->grid = g;
    impl->degree = degree;
    impl->kind = k;
    impl->nb = basis_count(g.dim, degree);
    impl->nv = value_count(k, g.dim);
    impl->analytic = true;
    impl->fn = std::move(fn);
    Form f;
    f.p_ = std::move(impl);
    return f;
}

Form Form::zero(const Grid& g, int degree, ValueKind k) {
    int nb = basis_count(g.dim, degree);
    int nv = value_count(k, g.dim);
    return analytic(g, degree, k, [nb, nv](const std::array<Jet, 4>&) {
        FormValue v;
        v.nb = nb;
        v.nv = nv;
        return v;
    });
}

Form Form::grid_samples(const Grid& g, int degree, ValueKind k, std::vector<double> data,
                        double time) {
    if (degree < 0 || degree > g.dim + 1)
        throw DegreeError("Form: degree out of range");
    auto impl = std::make_shared<Impl>();
    impl->grid = g;
    impl->degree = degree;
    impl->kind = k;
    impl->nb = basis_count(g.dim, degree);
    impl->nv = value_count(k, g.dim);
    impl->analytic = false;
    impl->time = time;
    std::size_t expect = std::size_t(impl->nb) * impl->nv * g.points();
    if (data.size() != expect) {
        if (!data.empty()) throw std::invalid_argument("Form: sample buffer size mismatch");
        data.assign(expect, 0.0);
    }
    impl->data = std::move(data);
    Form f;
    f.p_ = std::move(impl);
    return f;
}

bool Form::is_analytic() const { return impl().analytic; }
const Grid& Form::grid() const { return impl().grid; }
int Form::degree() const { return impl().degree; }
ValueKind Form::kind() const { return impl().kind; }
int Form::nb() const { return impl().nb; }
int Form::nv() const { return impl().nv; }
double Form::sample_time() const { return impl().time; }

FormValue Form::eval(const std::array<Jet, 4>& X) const {
    const Impl& im = impl();
    if (!im.analytic) throw std::logic_error("Form: eval needs analytic backing");
    if (im.nb == 0) {
        FormValue v;
        v.nb = 0;
        v.nv = im.nv;
        return v;
    }
    FormValue v = im.fn(X);
    v.nb = im.nb;
    v.nv = im.nv;
    return v;
}

FormValue Form::eval_at(double x, double y, double z, double t, int order) const {
    return eval(coord_jets(impl().grid, x, y, z, t, order));
}

double Form::coeff_at(double x, double y, double z, double t, int b, int v) const {
    return eval_at(x, y, z, t, 0).at(b, v).value();
}

const std::vector<double>& Form::data() const {
    const Impl& im = impl();
    if (im.analytic) throw std::logic_error("Form: data needs grid backing");
    return im.data;
}

double Form::node(int b, int v, std::size_t idx) const {
    const Impl& im = impl();
    return im.data[(std::size_t(b) * im.nv + v) * im.grid.points() + idx];
}

namespace {

void check_compatible(const Form& a, const Form& b) {
    if (a.degree() != b.degree() || a.kind() != b.kind())
        throw KindMismatchError("Form: degree/kind mismatch in linear combination");
    if (!a.grid().same_layout(b.grid()))
        throw std::invalid_argument("Form: grid mismatch");
    if (a.is_analytic() != b.is_analytic())
        throw std::invalid_argument("Form: backing mismatch");
}

Form linear(const Form& a, const Form& b, double sa, double sb) {
    check_compatible(a, b);
    if (a.is_analytic()) {
        Form fa = a, fb = b;
        return Form::analytic(a.grid(), a.degree(), a.kind(),
                              [fa, fb, sa, sb](const std::array<Jet, 4>& X) {
                                  FormValue va = fa.eval(X);
                                  FormValue vb = fb.eval(X);
                                  FormValue r;
                                  r.nb = va.nb;
                                  r.nv = va.nv;
                                  for (int i = 0; i < r.nb; ++i)
                                      for (int j = 0; j < r.nv; ++j)
                                          r.at(i, j) = sa * va.at(i, j) + sb * vb.at(i, j);
                                  return r;
                              });
    }
    std::vector<double> out(a.data().size());
    const auto& da = a.data();
    const auto& db = b.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sa * da[i] + sb * db[i];
    return Form::grid_samples(a.grid(), a.degree(), a.kind(), std::move(out), a.sample_time());
}

} // namespace

Form Form::operator+(const Form& o) const { return linear(*this, o, 1.0, 1.0); }
Form Form::operator-(const Form& o) const { return linear(*this, o, 1.0, -1.0); }
Form Form::operator-() const { return -1.0 * *this; }

Form operator*(double s, const Form& f) {
    if (f.is_analytic()) {
        Form g = f;
        return Form::analytic(f.grid(), f.degree(), f.kind(),
                              [g, s](const std::array<Jet, 4>& X) {
                                  FormValue v = g.eval(X);
                                  for (int i = 0; i < v.nb; ++i)
                                      for (int j = 0; j < v.nv; ++j) v.at(i, j) = s * v.at(i, j);
                                  return v;
                              });
    }
    std::vector<double> out(f.data().size());
    const auto& d = f.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * d[i];
    return Form::grid_samples(f.grid(), f.degree(), f.kind(), std::move(out), f.sample_time());
}

std::array<Jet, 4> coord_jets(const Grid& g, double x, double y, double z, double t, int order) {
    std::array<Jet, 4> X;
    X[0] = Jet::variable(x, 0, order);
    X[1] = Jet::variable(y, 1, order);
    X[2] = g.dim == 3 ? Jet::variable(z, 2, order) : Jet::constant(z);
    X[3] = Jet::variable(t, 3, order);
    return X;
}

Form sample(const Form& f, double t, int order) {
    if (!f.is_analytic()) return f;
    const Grid& g = f.grid();
    const int nb = f.nb(), nv = f.nv();
    std::vector<double> data(std::size_t(nb) * nv * g.points(), 0.0);
    const std::size_t npts = g.points();
    for (int ix = 0; ix < g.n[0]; ++ix)
        for (int iy = 0; iy < g.n[1]; ++iy)
            for (int iz = 0; iz < g.n[2]; ++iz) {
                auto X = coord_jets(g, g.coord(0, ix), g.coord(1, iy), g.coord(2, iz), t, order);
                FormValue v = f.eval(X);
                std::size_t idx = g.index(ix, iy, iz);
                for (int b = 0; b < nb; ++b)
                    for (int c = 0; c < nv; ++c)
                        data[(std::size_t(b) * nv + c) * npts + idx] = v.at(b, c).value();
            }
    return Form::grid_samples(g, f.degree(), f.kind(), std::move(data), t);
}

Norms norms(const Form& f, double t) {
    Form s = sample(f, t, 0);
    Norms r;
    double sumsq = 0.0;
    for (double v : s.data()) {
        r.inf = std::max(r.inf, std::abs(v));
        sumsq += v * v;
    }
    const Grid& g = f.grid();
    double vol = 1.0;
    for (int a = 0; a < g.dim; ++a) vol *= (g.hi[a] - g.lo[a]);
    std::size_t n = s.data().size();
    r.l2 = n ? std::sqrt(sumsq / double(n) * vol) : 0.0;
    return r;
}

double linf(const Form& f, double t) { return norms(f, t).inf; }

} // namespace meso
