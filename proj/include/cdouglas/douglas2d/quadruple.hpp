#pragma once

#include "cdouglas/finsler_core/connection_delta.hpp"

#include <array>

namespace cdouglas::douglas2d {

/// Coefficients of the angular ODE (f'' + f) P(theta) = f sin(theta) + f' cos(theta),
/// P = K0 cos^3 + K1 cos^2 sin + K2 cos sin^2 + K3 sin^3.
struct Quadruple {
    double k0 = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;

    std::array<double, 4> as_array() const { return {k0, k1, k2, k3}; }
    static Quadruple from_array(const std::array<double, 4>& a) { return {a[0], a[1], a[2], a[3]}; }
    bool operator==(const Quadruple&) const = default;
};

/// K0 = -T^2_11, K1 = T^1_11 - 2 T^2_12, K2 = 2 T^1_12 - T^2_22, K3 = T^1_22.
Quadruple quadruple_from_delta(const ConnectionDelta& t);

/// Canonical preimage: T^2_11 = -K0, T^1_11 = K1, T^1_12 = K2 / 2, T^1_22 = K3,
/// T^2_12 = T^2_22 = 0. The remaining freedom (T -> T + delta (x) a + a (x) delta)
/// only changes T(y, y) by multiples of y.
ConnectionDelta delta_from_quadruple(const Quadruple& k);

double p_polynomial(const Quadruple& k, double theta);
double p_derivative(const Quadruple& k, double theta);

/// The quadruple attached to a symmetric positive-definite 2x2 matrix g:
/// K0 = g12 g11 / det, K1 = 1 + 3 g12^2 / det, K2 = 3 g22 g12 / det, K3 = g22^2 / det.
Quadruple metric_to_quadruple(const Eigen::Matrix2d& g);

/// The (A, C) parametrisation with N = C - A^2 > 0:
/// K0 = AC / (A^2 - C), K1 = 1 - 3A^2 / (A^2 - C), K2 = 3A / (A^2 - C), K3 = -1 / (A^2 - C).
Quadruple quadruple_from_ac(double a, double c);

}  // namespace cdouglas::douglas2d
