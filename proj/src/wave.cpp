#include "meso/balance.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace meso {

namespace {

class StabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace

DispersionResult dispersion_check(const MaterialParameters& p, double k, int points,
                                  bool dissipative, double cfl, double dt_override) {
    if (p.rho_T <= 0.0) throw ParameterError("dispersion_check: rho_T must be positive");
    if (p.mu_T <= 0.0) throw ParameterError("dispersion_check: mu_T must be positive");
    const double a = p.mu_T, rho = p.rho_T;
    const double gamma = dissipative ? p.gamma_T : 0.0;
    const double c = std::sqrt(a / rho);
    const double h = 1.0 / points;
    const double dt_stable = h / c;
    double dt = dt_override > 0.0 ? dt_override : cfl * dt_stable;
    if (dt > dt_stable)
        throw StabilityError("dispersion_check: CFL violation, use dt <= " +
                             std::to_string(dt_stable));

    DispersionResult res;
    res.predicted_speed = c;
    res.predicted_decay = gamma / (2.0 * rho);
    res.cfl = dt / dt_stable;

    // right-travelling wave u(y,0) = cos(k y), u_t(y,0) = c k sin(k y)
    std::vector<double> u(size_t(points)), up(size_t(points)), un(size_t(points));
    for (int i = 0; i < points; ++i) u[size_t(i)] = std::cos(k * i * h);
    // first step from a Taylor expansion (keeps second-order accuracy)
    for (int i = 0; i < points; ++i) {
        int l = (i + points - 1) % points, r = (i + 1) % points;
        double lap = (u[size_t(l)] - 2 * u[size_t(i)] + u[size_t(r)]) / (h * h);
        double ut = c * k * std::sin(k * i * h);
        double utt = (a * lap - gamma * ut) / rho;
        up[size_t(i)] = u[size_t(i)] + dt * ut + 0.5 * dt * dt * utt;
    }

    // integrate an integer number of periods of the undamped mode
    const double period = 2.0 * M_PI / (c * k);
    const int n_periods = 2;
    int steps = std::max(1, int(std::llround(n_periods * period / dt)));
    double t_end = steps * dt;

    // track the complex mode amplitude over time for phase and decay fits
    auto mode = [&](const std::vector<double>& f) {
        std::complex<double> acc(0.0, 0.0);
        for (int i = 0; i < points; ++i)
            acc += f[size_t(i)] * std::exp(std::complex<double>(0.0, -k * i * h));
        return acc * (2.0 / double(points));
    };

    std::vector<double> phases, amps, times;
    auto record = [&](double t, const std::vector<double>& f) {
        std::complex<double> m = mode(f);
        phases.push_back(std::arg(m));
        amps.push_back(std::abs(m));
        times.push_back(t);
    };
    record(0.0, u);
    record(dt, up);

    std::vector<double>*prev = &u, *cur = &up, *next = &un;
    const double r2 = a * dt * dt / (rho * h * h);
    const double gfac = gamma * dt / (2.0 * rho);
    for (int n = 1; n < steps; ++n) {
        for (int i = 0; i < points; ++i) {
            int l = (i + points - 1) % points, r = (i + 1) % points;
            double lap = (*cur)[size_t(l)] - 2 * (*cur)[size_t(i)] + (*cur)[size_t(r)];
            (*next)[size_t(i)] = (2.0 * (*cur)[size_t(i)] - (1.0 - gfac) * (*prev)[size_t(i)] +
                                  r2 * lap) /
                                 (1.0 + gfac);
        }
        std::swap(prev, cur);
        std::swap(cur, next);
        record((n + 1) * dt, *cur);
    }

    // unwrap phases and fit d(phase)/dt = -c k by least squares
    std::vector<double> ph = phases;
    for (std::size_t i = 1; i < ph.size(); ++i) {
        while (ph[i] - ph[i - 1] > M_PI) ph[i] -= 2.0 * M_PI;
        while (ph[i] - ph[i - 1] < -M_PI) ph[i] += 2.0 * M_PI;
    }
    auto fit_slope = [&](const std::vector<double>& ys) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t n = ys.size();
        for (std::size_t i = 0; i < n; ++i) {
            sx += times[i];
            sy += ys[i];
            sxx += times[i] * times[i];
            sxy += times[i] * ys[i];
        }
        return (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
    };
    double omega_measured = -fit_slope(ph);
    // with damping the oscillation frequency shifts; divide it out
    double omega_pred_damped =
        std::sqrt(std::max(0.0, a * k * k / rho - gamma * gamma / (4.0 * rho * rho)));
    double scale = gamma > 0.0 && omega_pred_damped > 0.0 ? (c * k) / omega_pred_damped : 1.0;
    res.measured_speed = omega_measured / k * scale;

    std::vector<double> logamp(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) logamp[i] = std::log(std::max(amps[i], 1e-300));
    res.measured_decay = -fit_slope(logamp);
    (void)t_end;
    return res;
}

} // namespace meso
