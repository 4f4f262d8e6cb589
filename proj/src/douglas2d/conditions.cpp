#include "cdouglas/douglas2d/conditions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cdouglas::douglas2d {

namespace {

double numerator(const Quadruple& k, double t) {
    return 1.0 - k.k1 - 2.0 * k.k2 * t - 3.0 * k.k3 * t * t;
}

}  // namespace

RootAnalysis condition_b_roots(const Quadruple& k, double tol) {
    RootAnalysis out;
    const std::array<double, 4> coeffs = k.as_array();
    int degree = 3;
    while (degree >= 0 && coeffs[degree] == 0.0) --degree;
    out.degree = degree;
    std::ostringstream msg;
    msg.precision(17);

    if (degree < 0) {
        out.bounded = false;
        out.diagnostic = "P vanishes identically";
        return out;
    }
    if (degree >= 1) {
        Eigen::VectorXd poly(degree + 1);
        for (int i = 0; i <= degree; ++i) poly[i] = coeffs[i];
        Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(poly);
        double scale = 1.0;
        for (int i = 0; i < degree; ++i) scale = std::max(scale, std::abs(coeffs[i] / coeffs[degree]));
        const double imag_tol = 1e-9 * scale;
        for (const auto& r : solver.roots()) {
            out.roots.push_back(r);
            if (std::abs(r.imag()) <= imag_tol) out.real_roots.push_back(r.real());
        }
        std::sort(out.real_roots.begin(), out.real_roots.end());
    }
    bool shared = true;
    for (double t : out.real_roots) {
        const double num = numerator(k, t);
        out.numerator_at_real_roots.push_back(num);
        const double scale = 1.0 + std::abs(k.k1) + 2.0 * std::abs(k.k2 * t) + 3.0 * std::abs(k.k3) * t * t;
        if (std::abs(num) > tol * scale) shared = false;
    }

    if (degree == 3) {
        const auto count = out.real_roots.size();
        out.bounded = count == 1 && shared;
        if (count != 1) {
            msg << "cubic has " << count << " real roots (exactly one required)";
        } else if (!shared) {
            msg << "real root t = " << out.real_roots[0]
                << " is not a root of 1 - K1 - 2K2 t - 3K3 t^2 (value "
                << out.numerator_at_real_roots[0] << ")";
        } else {
            msg << "single real root t = " << out.real_roots[0] << " shared with the numerator";
        }
        out.diagnostic = msg.str();
        return out;
    }

    // K3 = 0: P(theta) vanishes at theta = +-pi/2. Expanding at theta = pi/2 + e,
    // (cos - P')/P ~ (K2 - (2K1 + 1) e) / (-K2 e + K1 e^2), bounded only if K2 = 0 and K1 = -1/2.
    out.bounded_at_vertical =
        std::abs(k.k2) <= tol * (1.0 + std::abs(k.k0) + std::abs(k.k1)) && std::abs(k.k1 + 0.5) <= tol;
    out.bounded = out.bounded_at_vertical && shared;
    msg << "degenerate leading coefficient K3 = 0 (degree " << degree << "): ";
    if (!out.bounded_at_vertical) {
        msg << "unbounded at theta = pi/2";
    } else if (!shared) {
        msg << "a real root of the reduced polynomial is not shared with the numerator";
    } else {
        msg << "bounded";
    }
    out.diagnostic = msg.str();
    return out;
}

ConditionA condition_a_integral(const Quadruple& k, double tol) {
    ConditionA out;
    out.roots = condition_b_roots(k, tol);
    if (!out.roots.bounded) {
        out.convergent = false;
        out.value = std::numeric_limits<double>::quiet_NaN();
        out.error_estimate = std::numeric_limits<double>::infinity();
        out.diagnostic = "divergent: " + out.roots.diagnostic;
        return out;
    }
    // near a shared root r both cos - P' and P vanish; there the tangent form with
    // (t - r) divided out of numerator and cubic avoids the 0/0 cancellation
    const double scale = std::max({std::abs(k.k0), std::abs(k.k1), std::abs(k.k2), std::abs(k.k3)});
    const std::vector<double> roots = out.roots.real_roots;
    auto integrand = [&k, scale, roots](double th) {
        const double p = p_polynomial(k, th);
        if (std::abs(p) > 1e-4 * scale) return (std::cos(th) - p_derivative(k, th)) / p;
        const double t = std::tan(th);
        for (double r : roots) {
            if (std::abs(t - r) > 1e-2 * (1.0 + std::abs(r))) continue;
            const double a2 = k.k3;
            const double a1 = k.k2 + r * a2;
            const double a0 = k.k1 + r * a1;
            const double b1 = -3.0 * k.k3;
            const double b0 = -2.0 * k.k2 + r * b1;
            return (1.0 + t * t) * (b1 * t + b0) / ((a2 * t + a1) * t + a0) + 3.0 * t;
        }
        return (std::cos(th) - p_derivative(k, th)) / p;
    };
    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
    std::vector<double> breaks{-kPi / 2.0};
    for (double r : out.roots.real_roots) breaks.push_back(std::atan(r));
    breaks.push_back(kPi / 2.0);
    std::sort(breaks.begin(), breaks.end());
    double total = 0.0;
    double err_total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] - breaks[i] <= 0.0) continue;
        double err = 0.0;
        total += Quadrature::integrate(integrand, breaks[i], breaks[i + 1], 12, 1e-12, &err);
        err_total += err;
    }
    out.convergent = true;
    out.value = total;
    out.error_estimate = err_total;
    std::ostringstream msg;
    msg.precision(17);
    msg << "integral = " << total;
    out.diagnostic = msg.str();
    return out;
}

}  // namespace cdouglas::douglas2d
