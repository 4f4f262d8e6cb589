#include "cdouglas/geoverify/geodesic.hpp"

#include "cdouglas/finsler_core/spray.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>

namespace cdouglas::geo {

namespace {

using State = std::vector<double>;

struct Escaped {};

template <class Accel>
GeodesicPath integrate(int n, const Vec& x0, const Vec& y0, double t_end, double tol, int samples,
                       Accel accel) {
    namespace ode = boost::numeric::odeint;
    if (x0.size() != n || y0.size() != n) throw DomainError("geodesic: dimension mismatch");
    if (!(t_end > 0.0)) throw DomainError("geodesic: t_end must be positive");
    if (!(tol > 0.0)) throw DomainError("geodesic: tolerance must be positive");
    if (samples < 2) throw DomainError("geodesic: need at least two samples");
    if (!(y0.norm() > 0.0)) throw DomainError("geodesic: initial velocity must be nonzero");

    State s(2 * n);
    for (int i = 0; i < n; ++i) {
        s[i] = x0[i];
        s[n + i] = y0[i];
    }
    auto system = [&](const State& z, State& dz, double) {
        Vec x(n);
        Vec v(n);
        for (int i = 0; i < n; ++i) {
            x[i] = z[i];
            v[i] = z[n + i];
        }
        const Vec a = accel(x, v);
        if (!a.allFinite()) throw Escaped{};
        for (int i = 0; i < n; ++i) {
            dz[i] = v[i];
            dz[n + i] = a[i];
        }
    };

    GeodesicPath path;
    path.tolerance = tol;
    const double speed0 = y0.norm();
    // returns false once the path leaves the bounded region
    auto record = [&](const State& z, double t) {
        Vec x(n);
        Vec v(n);
        for (int i = 0; i < n; ++i) {
            x[i] = z[i];
            v[i] = z[n + i];
        }
        if (!x.allFinite() || !v.allFinite() || (x - x0).norm() > kEscapeRadius ||
            v.norm() > kEscapeSpeedFactor * speed0) {
            return false;
        }
        path.t.push_back(t);
        path.x.push_back(x);
        path.v.push_back(v);
        return true;
    };

    auto stepper = ode::make_dense_output(tol, tol, ode::runge_kutta_dopri5<State>());
    const double dt = t_end / (samples - 1);
    stepper.initialize(s, 0.0, std::min(dt, 1e-3 * t_end));
    record(s, 0.0);
    int next = 1;
    State tmp(2 * n);
    while (next < samples) {
        if (path.steps >= kMaxSteps) throw NumericalError("geodesic: step limit reached");
        const double t_prev = stepper.current_time();
        try {
            stepper.do_step(system);
        } catch (const ode::step_adjustment_error&) {
            path.escaped = true;
            break;
        } catch (const Escaped&) {
            path.escaped = true;
            break;
        }
        ++path.steps;
        const double t_now = std::min(stepper.current_time(), t_end);
        std::vector<double> when;
        for (int q = 1; q <= kSubSamples; ++q) when.push_back(t_prev + (t_now - t_prev) * q / kSubSamples);
        while (next < samples && next * dt <= t_now + 1e-14 * t_end) when.push_back(std::min(next++ * dt, t_end));
        std::sort(when.begin(), when.end());
        bool inside = true;
        double last = t_prev;
        for (double tq : when) {
            if (tq <= last + 1e-15 * t_end) continue;
            stepper.calc_state(tq, tmp);
            last = tq;
            if (!(inside = record(tmp, tq))) break;
        }
        if (!inside) {
            path.escaped = true;
            break;
        }
    }
    if (path.t.size() < 2) throw NumericalError("geodesic escaped before the first sample");
    return path;
}

}  // namespace

GeodesicPath integrate_finsler_geodesic(const MetricField& field, const Vec& x0, const Vec& y0,
                                        double t_end, double tol, int samples) {
    const double f0 = field.value(x0, y0);
    if (!(f0 > 0.0)) throw DomainError("geodesic: F(x0, y0) must be positive");
    GeodesicPath path;
    try {
        path = integrate(field.dimension(), x0, y0, t_end, tol, samples,
                         [&](const Vec& x, const Vec& v) -> Vec { return -2.0 * spray(field, x, v).coefficients; });
    } catch (const SingularDirectionError& e) {
        throw NumericalError(std::string("geodesic left the regular region: ") + e.what());
    } catch (const DegenerateMetricError& e) {
        throw NumericalError(std::string("geodesic left the regular region: ") + e.what());
    }
    for (std::size_t k = 0; k < path.t.size(); ++k) {
        path.speed_drift = std::max(path.speed_drift, std::abs(field.value(path.x[k], path.v[k]) - f0) / f0);
    }
    return path;
}

GeodesicPath integrate_affine_geodesic(const AffineConnection& conn, const Vec& x0, const Vec& y0,
                                       double t_end, double tol, int samples) {
    return integrate(conn.dimension(), x0, y0, t_end, tol, samples,
                     [&](const Vec& x, const Vec& v) -> Vec { return -conn.quadratic(x, v); });
}

namespace {

// Cubic Hermite piece on [t_k, t_{k+1}] in local parameter tau in [0, 1].
struct Piece {
    Vec x0, x1, m0, m1;  // m = h * velocity

    Vec position(double tau) const {
        const double t2 = tau * tau;
        const double t3 = t2 * tau;
        return (2 * t3 - 3 * t2 + 1) * x0 + (t3 - 2 * t2 + tau) * m0 + (-2 * t3 + 3 * t2) * x1 +
               (t3 - t2) * m1;
    }
    Vec derivative(double tau) const {
        const double t2 = tau * tau;
        return (6 * t2 - 6 * tau) * x0 + (3 * t2 - 4 * tau + 1) * m0 + (-6 * t2 + 6 * tau) * x1 +
               (3 * t2 - 2 * tau) * m1;
    }
    /// arc length from 0 to tau, 5-point Gauss-Legendre
    double length(double tau) const {
        static const double nodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                        0.5384693101056831, 0.9061798459386640};
        static const double weights[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                          0.4786286704993665, 0.2369268850561891};
        double acc = 0.0;
        for (int q = 0; q < 5; ++q) acc += weights[q] * derivative(0.5 * tau * (nodes[q] + 1.0)).norm();
        return 0.5 * tau * acc;
    }
};

class ArcLengthCurve {
public:
    explicit ArcLengthCurve(const GeodesicPath& p) {
        if (p.t.size() < 2) throw DomainError("path needs at least two samples");
        cumulative_.push_back(0.0);
        for (std::size_t k = 0; k + 1 < p.t.size(); ++k) {
            const double h = p.t[k + 1] - p.t[k];
            pieces_.push_back({p.x[k], p.x[k + 1], h * p.v[k], h * p.v[k + 1]});
            cumulative_.push_back(cumulative_.back() + pieces_.back().length(1.0));
        }
    }

    double length() const { return cumulative_.back(); }

    Vec at(double s) const {
        s = std::clamp(s, 0.0, length());
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
        std::size_t k = it == cumulative_.begin() ? 0 : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
        if (k >= pieces_.size()) k = pieces_.size() - 1;
        const Piece& pc = pieces_[k];
        const double target = s - cumulative_[k];
        const double seg = cumulative_[k + 1] - cumulative_[k];
        if (seg <= 0.0) return pc.x0;
        double lo = 0.0;
        double hi = 1.0;
        double tau = target / seg;
        for (int it2 = 0; it2 < 60; ++it2) {
            const double f = pc.length(tau) - target;
            if (std::abs(f) < 1e-15 * (1.0 + seg)) break;
            if (f > 0.0) hi = tau;
            else lo = tau;
            const double d = pc.derivative(tau).norm();
            double next = d > 0.0 ? tau - f / d : 0.5 * (lo + hi);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            tau = next;
        }
        return pc.position(tau);
    }

private:
    std::vector<Piece> pieces_;
    std::vector<double> cumulative_;
};

}  // namespace

double path_length(const GeodesicPath& p) { return ArcLengthCurve(p).length(); }

double path_projective_match(const GeodesicPath& p1, const GeodesicPath& p2, int samples) {
    if (p1.x.empty() || p2.x.empty()) throw DomainError("path_projective_match: empty path");
    if ((p1.x.front() - p2.x.front()).norm() > 1e-9 * (1.0 + p1.x.front().norm())) {
        throw DomainError("path_projective_match: paths start at different points");
    }
    if (samples < 2) throw DomainError("path_projective_match: need at least two samples");
    const ArcLengthCurve c1(p1);
    const ArcLengthCurve c2(p2);
    const double common = std::min(c1.length(), c2.length());
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double s = common * k / (samples - 1);
        worst = std::max(worst, (c1.at(s) - c2.at(s)).norm());
    }
    return worst;
}

}  // namespace cdouglas::geo
