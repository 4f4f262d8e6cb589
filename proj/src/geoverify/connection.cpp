#include "cdouglas/geoverify/connection.hpp"

namespace cdouglas::geo {

ConnectionDelta levi_civita(const RiemannianMetricField& g, const Vec& x) {
    const int n = g.dimension;
    if (x.size() != n) throw DomainError("levi_civita: point dimension mismatch");
    const Mat gx = g.metric(x);
    if (!is_positive_definite(gx)) throw DegenerateMetricError("levi_civita: metric is not positive definite");
    const std::vector<Mat> dg = g.derivatives(x);
    const Mat ginv = gx.inverse();
    ConnectionDelta gamma(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = j; k < n; ++k) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l) {
                    acc += ginv(i, l) * (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
                }
                gamma.set(i, j, k, 0.5 * acc);
            }
        }
    }
    return gamma;
}

AffineConnection::AffineConnection(int dimension, Coefficients coefficients)
    : n_(dimension), coefficients_(std::move(coefficients)) {
    if (dimension < 1) throw DomainError("connection dimension must be positive");
}

AffineConnection AffineConnection::zero(int dimension) {
    return AffineConnection(dimension, [dimension](const Vec&) { return ConnectionDelta(dimension); });
}

AffineConnection AffineConnection::constant(ConnectionDelta gamma) {
    const int n = gamma.dimension();
    return AffineConnection(n, [gamma = std::move(gamma)](const Vec&) { return gamma; });
}

AffineConnection AffineConnection::levi_civita(RiemannianMetricField g) {
    const int n = g.dimension;
    return AffineConnection(n, [g = std::move(g)](const Vec& x) { return geo::levi_civita(g, x); });
}

}  // namespace cdouglas::geo
