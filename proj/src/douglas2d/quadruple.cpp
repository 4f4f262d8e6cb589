#include "cdouglas/douglas2d/quadruple.hpp"

#include <cmath>

namespace cdouglas::douglas2d {

Quadruple quadruple_from_delta(const ConnectionDelta& t) {
    if (t.dimension() != 2) throw DomainError("quadruple_from_delta needs a 2-dimensional tensor");
    // Zero-based: T(i, j, k) = T^{i+1}_{j+1 k+1}.
    return {-t(1, 0, 0), t(0, 0, 0) - 2.0 * t(1, 0, 1), 2.0 * t(0, 0, 1) - t(1, 1, 1), t(0, 1, 1)};
}

ConnectionDelta delta_from_quadruple(const Quadruple& k) {
    ConnectionDelta t(2);
    t.set(1, 0, 0, -k.k0);
    t.set(0, 0, 0, k.k1);
    t.set(0, 0, 1, 0.5 * k.k2);
    t.set(0, 1, 1, k.k3);
    return t;
}

double p_polynomial(const Quadruple& k, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return k.k0 * c * c * c + k.k1 * c * c * s + k.k2 * c * s * s + k.k3 * s * s * s;
}

double p_derivative(const Quadruple& k, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return -3.0 * k.k0 * c * c * s + k.k1 * (c * c * c - 2.0 * c * s * s) +
           k.k2 * (2.0 * c * c * s - s * s * s) + 3.0 * k.k3 * s * s * c;
}

Quadruple metric_to_quadruple(const Eigen::Matrix2d& g) {
    if (std::abs(g(0, 1) - g(1, 0)) > 1e-14 * (1.0 + g.cwiseAbs().maxCoeff())) {
        throw DomainError("metric_to_quadruple: matrix is not symmetric");
    }
    const double g11 = g(0, 0);
    const double g12 = 0.5 * (g(0, 1) + g(1, 0));
    const double g22 = g(1, 1);
    const double det = g11 * g22 - g12 * g12;
    if (!(g11 > 0.0) || !(det > 0.0)) {
        throw DomainError("metric_to_quadruple: matrix is not positive definite");
    }
    return {g12 * g11 / det, 1.0 + 3.0 * g12 * g12 / det, 3.0 * g22 * g12 / det, g22 * g22 / det};
}

Quadruple quadruple_from_ac(double a, double c) {
    const double denom = a * a - c;
    return {a * c / denom, 1.0 - 3.0 * a * a / denom, 3.0 * a / denom, -1.0 / denom};
}

}  // namespace cdouglas::douglas2d
