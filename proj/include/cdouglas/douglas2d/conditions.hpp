#pragma once

#include "cdouglas/douglas2d/quadruple.hpp"

#include <complex>
#include <string>
#include <vector>

namespace cdouglas::douglas2d {

/// Root data of the tangent-substituted denominator K0 + K1 t + K2 t^2 + K3 t^3
/// and numerator 1 - K1 - 2 K2 t - 3 K3 t^2 of (cos - P') / P.
struct RootAnalysis {
    bool bounded = false;  ///< (cos - P') / P stays bounded on the circle
    int degree = 0;        ///< effective degree of the denominator polynomial
    std::vector<std::complex<double>> roots;
    std::vector<double> real_roots;
    std::vector<double> numerator_at_real_roots;
    bool bounded_at_vertical = true;  ///< behaviour at theta = +-pi/2 (only fails when K3 = 0)
    std::string diagnostic;
};

/// Companion-matrix roots; a root is real when |Im| <= 1e-9 * coefficient scale.
RootAnalysis condition_b_roots(const Quadruple& k, double tol = 1e-8);

struct ConditionA {
    bool convergent = false;
    double value = 0.0;       ///< integral over (-pi/2, pi/2); NaN when divergent
    double error_estimate = 0.0;
    RootAnalysis roots;
    std::string diagnostic;

    bool satisfied(double tol = 1e-6) const { return convergent && std::abs(value) < tol; }
};

/// Integral of (cos - P') / P over (-pi/2, pi/2). The odd 3 tan(theta) part of the
/// tangent form integrates to zero over the symmetric interval, so the bounded
/// integrand is integrated directly (adaptive Gauss-Kronrod, split at the shared
/// root). Reports divergence instead when the bounded-ness test fails.
ConditionA condition_a_integral(const Quadruple& k, double tol = 1e-8);

}  // namespace cdouglas::douglas2d
