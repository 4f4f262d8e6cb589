#pragma once

#include "cdouglas/finsler_core/connection_delta.hpp"
#include "cdouglas/finsler_core/metric_field.hpp"
#include "cdouglas/finsler_core/periodic_profile.hpp"

namespace cdouglas {

/// Spray coefficients G^i(x, y); geodesics solve x'' + 2 G(x, x') = 0.
struct SprayValue {
    Vec coefficients;
};

/// g_{ij} = 1/2 [F^2]_{y^i y^j}. Throws SingularDirectionError when the result
/// fails the positive-definiteness test (non-convex input).
Mat fundamental_tensor(const MetricField& field, const Vec& x, const Vec& y);
Mat fundamental_tensor(const EnergyJet& jet);

/// G^i = 1/4 g^{il} ([F^2]_{x^k y^l} y^k - [F^2]_{x^l}).
SprayValue spray(const MetricField& field, const Vec& x, const Vec& y);
SprayValue spray(const EnergyJet& jet, const Vec& y);

/// Spray of e^{sigma(x)} F from the spray of F:
/// G~^i = G^i + sigma_0 y^i - (F^2 / 2) sigma^i, sigma^i = g^{il} sigma_l.
SprayValue conformal_spray_shift(const SprayValue& spray, const MetricField& field, const Vec& x,
                                 const Vec& y, const Vec& sigma);

/// Euclidean norm of the part of 2G - Gamma(y, y) orthogonal to y; zero iff
/// 2G = Gamma(y, y) + P y for some scalar P.
double projective_residual(const SprayValue& spray, const ConnectionDelta& connection,
                           const Vec& y);

/// Hessian of F = r f(theta) by the polar closed form
/// ((f + f'') / r) [[sin^2, -cos sin], [-cos sin, cos^2]].
Eigen::Matrix2d hessian_profile(const TangentNorm2D& norm, const Vec& y);

}  // namespace cdouglas
