#pragma once

#include "cdouglas/finsler_core/connection_delta.hpp"
#include "cdouglas/finsler_core/metric_field.hpp"

#include <functional>

namespace cdouglas::geo {

/// Christoffel symbols of a Riemannian metric field at x:
/// 1/2 g^{il} (d_j g_{lk} + d_k g_{lj} - d_l g_{jk}). Throws DegenerateMetricError
/// when g(x) is not positive definite.
ConnectionDelta levi_civita(const RiemannianMetricField& g, const Vec& x);

/// A torsion-free affine connection x -> Gamma^i_{jk}(x).
class AffineConnection {
public:
    using Coefficients = std::function<ConnectionDelta(const Vec&)>;

    AffineConnection(int dimension, Coefficients coefficients);

    static AffineConnection zero(int dimension);
    static AffineConnection constant(ConnectionDelta gamma);
    static AffineConnection levi_civita(RiemannianMetricField g);

    int dimension() const { return n_; }
    ConnectionDelta at(const Vec& x) const { return coefficients_(x); }
    /// Gamma^i_{jk}(x) v^j v^k
    Vec quadratic(const Vec& x, const Vec& v) const { return coefficients_(x).contract(v); }

private:
    int n_;
    Coefficients coefficients_;
};

}  // namespace cdouglas::geo
