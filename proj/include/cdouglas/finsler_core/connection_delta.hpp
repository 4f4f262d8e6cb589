#pragma once

#include "cdouglas/finsler_core/common.hpp"

#include <vector>

namespace cdouglas {

/// A constant (1,2)-tensor T^i_{jk}, symmetric in the lower indices. Used both
/// for the difference of two torsion-free connections and for the Christoffel
/// symbols of a single connection at a point. Indices are zero based.
class ConnectionDelta {
public:
    ConnectionDelta() = default;
    explicit ConnectionDelta(int dimension);

    /// Builds from nested [i][j][k] data; throws DomainError unless symmetric in (j,k)
    /// to within sym_tol.
    static ConnectionDelta from_nested(const std::vector<std::vector<std::vector<double>>>& data,
                                       double sym_tol = 1e-12);

    int dimension() const { return n_; }

    double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
    /// Writes both T^i_{jk} and T^i_{kj}.
    void set(int i, int j, int k, double value);

    /// v^i = T^i_{jk} y^j y^k.
    Vec contract(const Vec& y) const;
    /// M(i, j) = T^i_{jk} y^k.
    Mat contract_once(const Vec& y) const;

    std::vector<std::vector<std::vector<double>>> to_nested() const;

    ConnectionDelta operator-() const;
    ConnectionDelta operator+(const ConnectionDelta& other) const;
    ConnectionDelta operator-(const ConnectionDelta& other) const;
    ConnectionDelta operator*(double s) const;

    double max_abs() const;

private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }

    int n_ = 0;
    std::vector<double> data_;
};

}  // namespace cdouglas
