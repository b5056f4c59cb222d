#include "meso/jet.hpp"

#include <cassert>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace meso {
namespace {

struct Tables {
    // exponents of each multi-index, |alpha| <= 3 over 4 variables
    std::array<std::array<int8_t, Jet::kVars>, Jet::kTerms> exp{};
    std::array<int8_t, Jet::kTerms> total{};
    // lookup from packed exponents to term index (4 bits per variable)
    std::array<int16_t, 1 << 16> lookup{};
    // product pairs: for every (i, j) with |a_i| + |a_j| <= 3 the target k
    struct Triple { int16_t i, j, k; };
    std::vector<Triple> prod;
    // derivative: deriv[v][i] = index of alpha_i + e_v, or -1
    std::array<std::array<int16_t, Jet::kTerms>, Jet::kVars> up{};

    Tables() {
        lookup.fill(-1);
        int n = 0;
        for (int o = 0; o <= Jet::kOrder; ++o) {
            for (int a = 0; a <= o; ++a)
                for (int b = 0; a + b <= o; ++b)
                    for (int c = 0; a + b + c <= o; ++c) {
                        int d = o - a - b - c;
                        exp[n] = {int8_t(a), int8_t(b), int8_t(c), int8_t(d)};
                        total[n] = int8_t(o);
                        lookup[pack(exp[n])] = int16_t(n);
                        ++n;
                    }
        }
        assert(n == Jet::kTerms);
        for (int i = 0; i < Jet::kTerms; ++i)
            for (int j = 0; j < Jet::kTerms; ++j) {
                if (total[i] + total[j] > Jet::kOrder) continue;
                std::array<int8_t, 4> s;
                for (int v = 0; v < 4; ++v) s[v] = int8_t(exp[i][v] + exp[j][v]);
                prod.push_back({int16_t(i), int16_t(j), lookup[pack(s)]});
            }
        for (int v = 0; v < Jet::kVars; ++v)
            for (int i = 0; i < Jet::kTerms; ++i) {
                std::array<int8_t, 4> s = exp[i];
                s[v] = int8_t(s[v] + 1);
                up[v][i] = (total[i] + 1 <= Jet::kOrder) ? lookup[pack(s)] : int16_t(-1);
            }
    }

    static int pack(const std::array<int8_t, 4>& e) {
        return (e[0] << 12) | (e[1] << 8) | (e[2] << 4) | e[3];
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

} // namespace

Jet::Jet() : c_{}, ord_(kOrder) {}

Jet Jet::constant(double v) {
    Jet j;
    j.c_[0] = v;
    return j;
}

Jet Jet::variable(double v, int var, int order) {
    assert(var >= 0 && var < kVars);
    Jet j;
    j.ord_ = order;
    j.c_[0] = v;
    if (order >= 1) {
        std::array<int8_t, 4> e{};
        e[var] = 1;
        j.c_[size_t(tables().lookup[Tables::pack(e)])] = 1.0;
    }
    return j;
}

double Jet::value() const { return c_[0]; }

double Jet::d(int var) const {
    if (ord_ < 1) throw std::logic_error("Jet: derivative order exhausted");
    std::array<int8_t, 4> e{};
    e[var] = 1;
    return c_[size_t(tables().lookup[Tables::pack(e)])];
}

Jet Jet::truncated(int order) const {
    Jet r = *this;
    r.ord_ = std::min(ord_, order);
    const auto& T = tables();
    for (int i = 0; i < kTerms; ++i)
        if (T.total[i] > r.ord_) r.c_[i] = 0.0;
    return r;
}

Jet Jet::deriv(int var) const {
    if (ord_ < 1) throw std::logic_error("Jet: derivative order exhausted");
    const auto& T = tables();
    Jet r;
    r.ord_ = ord_ - 1;
    for (int i = 0; i < kTerms; ++i) {
        if (T.total[i] > r.ord_) continue;
        int16_t k = T.up[var][i];
        if (k >= 0) r.c_[i] = (T.exp[i][var] + 1) * c_[k];
    }
    return r;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    ord_ = std::min(ord_, o.ord_);
    for (int i = 0; i < kTerms; ++i) c_[i] += o.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    ord_ = std::min(ord_, o.ord_);
    for (int i = 0; i < kTerms; ++i) c_[i] -= o.c_[i];
    return *this;
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet r = a;
    r += b;
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    Jet r = a;
    r -= b;
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    const auto& T = tables();
    Jet r;
    r.ord_ = std::min(a.ord_, b.ord_);
    for (const auto& p : T.prod) {
        if (T.total[size_t(p.k)] > r.ord_) continue;
        r.c_[size_t(p.k)] += a.c_[size_t(p.i)] * b.c_[size_t(p.j)];
    }
    return r;
}

Jet operator*(double s, const Jet& a) {
    Jet r = a;
    for (auto& v : r.c_) v *= s;
    return r;
}

Jet operator*(const Jet& a, double s) { return s * a; }

Jet operator+(const Jet& a, double s) {
    Jet r = a;
    r.c_[0] += s;
    return r;
}

Jet operator+(double s, const Jet& a) { return a + s; }

Jet operator-(const Jet& a, double s) { return a + (-s); }

Jet operator-(double s, const Jet& a) { return (-a) + s; }

Jet Jet::compose(const Jet& g, double f0, double f1, double f2, double f3) {
    Jet h = g;
    h.c_[0] = 0.0;
    Jet h2 = h * h;
    Jet h3 = h2 * h;
    Jet r = (f3 / 6.0) * h3;
    r += (f2 / 2.0) * h2;
    r += f1 * h;
    r.c_[0] += f0;
    r.ord_ = g.ord_;
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    double b0 = b.value();
    if (b0 == 0.0) throw std::domain_error("Jet: division by zero value");
    double i1 = -1.0 / (b0 * b0);
    double i2 = 2.0 / (b0 * b0 * b0);
    double i3 = -6.0 / (b0 * b0 * b0 * b0);
    return a * Jet::compose(b, 1.0 / b0, i1, i2, i3);
}

Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

Jet sin(const Jet& g) {
    double v = g.value();
    return Jet::compose(g, std::sin(v), std::cos(v), -std::sin(v), -std::cos(v));
}

Jet cos(const Jet& g) {
    double v = g.value();
    return Jet::compose(g, std::cos(v), -std::sin(v), -std::cos(v), std::sin(v));
}

Jet exp(const Jet& g) {
    double v = std::exp(g.value());
    return Jet::compose(g, v, v, v, v);
}

Jet sqrt(const Jet& g) {
    double v = g.value();
    if (v <= 0.0) throw std::domain_error("Jet: sqrt of non-positive value");
    double s = std::sqrt(v);
    return Jet::compose(g, s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
}

} // namespace meso
