#include "cdouglas/douglas2d/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cdouglas::douglas2d {

std::vector<double> ode_residual(const PeriodicProfile& f, const Quadruple& k) {
    const auto& v = f.samples();
    const auto d1 = f.grid_derivative(1);
    const auto d2 = f.grid_derivative(2);
    std::vector<double> out(v.size());
    for (int i = 0; i < f.resolution(); ++i) {
        const double t = f.theta(i);
        out[i] = (d2[i] + v[i]) * p_polynomial(k, t) - v[i] * std::sin(t) - std::cos(t) * d1[i];
    }
    return out;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

ProfileChecks check_profile(const PeriodicProfile& f) {
    const auto& v = f.samples();
    const auto d2 = f.grid_derivative(2);
    ProfileChecks c{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < v.size(); ++i) {
        c.min_value = std::min(c.min_value, v[i]);
        c.min_convexity = std::min(c.min_convexity, v[i] + d2[i]);
    }
    return c;
}

PeriodicProfile metric_profile(const Eigen::Matrix2d& g, double const1, double const2,
                               int resolution) {
    const double g11 = g(0, 0);
    const double g12 = g(0, 1);
    const double g22 = g(1, 1);
    return PeriodicProfile::from_analytic(
        [=](double t) {
            const double c = std::cos(t);
            const double s = std::sin(t);
            const double c2 = std::cos(2.0 * t);
            const double s2 = std::sin(2.0 * t);
            const double q = g11 * c * c + 2.0 * g12 * c * s + g22 * s * s;
            const double q1 = (g22 - g11) * s2 + 2.0 * g12 * c2;
            const double q2 = 2.0 * (g22 - g11) * c2 - 4.0 * g12 * s2;
            const double root = std::sqrt(q);
            PeriodicProfile::Jet j;
            j.value = const1 * root + const2 * c;
            j.d1 = const1 * q1 / (2.0 * root) - const2 * s;
            j.d2 = const1 * (q2 / (2.0 * root) - q1 * q1 / (4.0 * q * root)) - const2 * c;
            return j;
        },
        resolution);
}

OdeSolution general_solution(const Classification& cls, double const1, double const2,
                             int resolution) {
    if (!cls.admissible()) {
        throw DomainError("general_solution requires an admissible classification");
    }
    if (!(const1 > 0.0)) throw DomainError("general_solution requires const1 > 0");
    return {metric_profile(cls.gnorm, const1, const2, resolution), const1, const2};
}

PeriodicProfile symmetrize(const PeriodicProfile& f) {
    if (f.is_analytic()) {
        return PeriodicProfile::from_analytic(
            [f](double t) {
                const auto a = f.jet(t);
                const auto b = f.jet(t + kPi);
                return PeriodicProfile::Jet{a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
            },
            f.resolution());
    }
    const auto& v = f.samples();
    const int n = f.resolution();
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = v[i] + v[(i + n / 2) % n];
    return PeriodicProfile::from_samples(std::move(out));
}

HgDiagnostics hg_diagnostics(const PeriodicProfile& f, const Quadruple& k, double flag_threshold) {
    const int n = f.resolution();
    HgDiagnostics d;
    d.theta.resize(n);
    d.h.resize(n);
    d.g.resize(n);
    d.g_product.resize(n);
    d.ln_residual.resize(n);
    d.flagged.assign(n, false);

    std::vector<double> p(n), dp(n), dh(n);
    double p_scale = 0.0;
    double h_scale = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * (i + 0.5) / n;
        const auto j = f.jet(t);
        const double c = std::cos(t);
        const double s = std::sin(t);
        d.theta[i] = t;
        d.h[i] = j.d1 * c + j.value * s;
        // Product rule: (f' cos + f sin)' = f'' cos - f' sin + f' sin + f cos.
        dh[i] = j.d2 * c - j.d1 * s + j.d1 * s + j.value * c;
        p[i] = p_polynomial(k, t);
        dp[i] = p_derivative(k, t);
        p_scale = std::max(p_scale, std::abs(p[i]));
        h_scale = std::max(h_scale, std::abs(d.h[i]));
    }
    d.min_g = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double c = std::cos(d.theta[i]);
        const bool bad = std::abs(p[i]) < flag_threshold * p_scale || std::abs(c) < flag_threshold ||
                         std::abs(d.h[i]) < flag_threshold * h_scale;
        d.flagged[i] = bad;
        if (bad) {
            ++d.flagged_count;
            d.g[i] = d.g_product[i] = d.ln_residual[i] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        d.g[i] = d.h[i] / p[i];
        d.g_product[i] = dh[i] / c;
        const double ln_g_prime = dh[i] / d.h[i] - dp[i] / p[i];
        d.ln_residual[i] = ln_g_prime - (c - dp[i]) / p[i];
        d.max_ln_residual = std::max(d.max_ln_residual, std::abs(d.ln_residual[i]));
        d.max_g_mismatch = std::max(d.max_g_mismatch, std::abs(d.g[i] - d.g_product[i]));
        d.min_g = std::min(d.min_g, d.g[i]);
    }
    return d;
}

}  // namespace cdouglas::douglas2d
