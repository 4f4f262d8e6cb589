#include "cdouglas/finsler_core/spray.hpp"

#include <cmath>

namespace cdouglas {

namespace {

void require_nonzero(const Vec& y) {
    if (!(y.norm() > 0.0)) throw DomainError("tangent vector must be nonzero");
}

Mat checked_metric(const EnergyJet& jet, bool for_inverse) {
    Mat g = 0.25 * (jet.dyy + jet.dyy.transpose());
    if (!is_positive_definite(g)) {
        if (for_inverse) {
            throw DegenerateMetricError("fundamental tensor is numerically singular");
        }
        throw SingularDirectionError(
            "fundamental tensor is not positive definite (non-convex metric?)");
    }
    return g;
}

}  // namespace

Mat fundamental_tensor(const EnergyJet& jet) { return checked_metric(jet, false); }

Mat fundamental_tensor(const MetricField& field, const Vec& x, const Vec& y) {
    require_nonzero(y);
    return fundamental_tensor(field.energy_jet(x, y));
}

SprayValue spray(const EnergyJet& jet, const Vec& y) {
    const Mat g = checked_metric(jet, true);
    const Vec rhs = jet.dxdy.transpose() * y - jet.dx;
    return {0.25 * g.ldlt().solve(rhs)};
}

SprayValue spray(const MetricField& field, const Vec& x, const Vec& y) {
    require_nonzero(y);
    return spray(field.energy_jet(x, y), y);
}

SprayValue conformal_spray_shift(const SprayValue& s, const MetricField& field, const Vec& x,
                                 const Vec& y, const Vec& sigma) {
    require_nonzero(y);
    if (sigma.size() != y.size() || s.coefficients.size() != y.size()) {
        throw DomainError("dimension mismatch in conformal spray shift");
    }
    const EnergyJet jet = field.energy_jet(x, y);
    const Mat g = checked_metric(jet, true);
    const Vec sigma_up = g.ldlt().solve(sigma);
    const double sigma0 = sigma.dot(y);
    return {s.coefficients + sigma0 * y - 0.5 * jet.energy * sigma_up};
}

double projective_residual(const SprayValue& s, const ConnectionDelta& connection, const Vec& y) {
    require_nonzero(y);
    if (connection.dimension() != y.size() || s.coefficients.size() != y.size()) {
        throw DomainError("dimension mismatch in projective residual");
    }
    const Vec w = 2.0 * s.coefficients - connection.contract(y);
    const Vec orth = w - (w.dot(y) / y.squaredNorm()) * y;
    return orth.norm();
}

Eigen::Matrix2d hessian_profile(const TangentNorm2D& norm, const Vec& y) {
    const auto [r, t] = polar(y);
    const auto j = norm.profile().jet(t);
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double w = (j.value + j.d2) / r;
    Eigen::Matrix2d h;
    h << w * s * s, -w * c * s, -w * c * s, w * c * c;
    return h;
}

}  // namespace cdouglas
