#include "cdouglas/finsler_core/connection_delta.hpp"

#include <algorithm>
#include <cmath>

namespace cdouglas {

ConnectionDelta::ConnectionDelta(int dimension) : n_(dimension) {
    if (dimension < 1) throw DomainError("connection dimension must be positive");
    data_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0.0);
}

ConnectionDelta ConnectionDelta::from_nested(
    const std::vector<std::vector<std::vector<double>>>& data, double sym_tol) {
    const int n = static_cast<int>(data.size());
    ConnectionDelta t(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(data[i].size()) != n) throw DomainError("tensor T must be n x n x n");
        for (int j = 0; j < n; ++j) {
            if (static_cast<int>(data[i][j].size()) != n) {
                throw DomainError("tensor T must be n x n x n");
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = j; k < n; ++k) {
                const double a = data[i][j][k];
                const double b = data[i][k][j];
                if (std::abs(a - b) > sym_tol * (1.0 + std::abs(a))) {
                    throw DomainError("tensor T is not symmetric in its lower indices");
                }
                t.set(i, j, k, 0.5 * (a + b));
            }
        }
    }
    return t;
}

void ConnectionDelta::set(int i, int j, int k, double value) {
    data_[index(i, j, k)] = value;
    data_[index(i, k, j)] = value;
}

Vec ConnectionDelta::contract(const Vec& y) const {
    if (y.size() != n_) throw DomainError("dimension mismatch in tensor contraction");
    Vec v = Vec::Zero(n_);
    for (int i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n_; ++j) {
            for (int k = 0; k < n_; ++k) acc += (*this)(i, j, k) * y[j] * y[k];
        }
        v[i] = acc;
    }
    return v;
}

Mat ConnectionDelta::contract_once(const Vec& y) const {
    if (y.size() != n_) throw DomainError("dimension mismatch in tensor contraction");
    Mat m = Mat::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n_; ++k) acc += (*this)(i, j, k) * y[k];
            m(i, j) = acc;
        }
    }
    return m;
}

std::vector<std::vector<std::vector<double>>> ConnectionDelta::to_nested() const {
    std::vector<std::vector<std::vector<double>>> out(
        n_, std::vector<std::vector<double>>(n_, std::vector<double>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) out[i][j][k] = (*this)(i, j, k);
    return out;
}

ConnectionDelta ConnectionDelta::operator-() const { return (*this) * -1.0; }

ConnectionDelta ConnectionDelta::operator+(const ConnectionDelta& other) const {
    if (other.n_ != n_) throw DomainError("dimension mismatch in tensor sum");
    ConnectionDelta out(*this);
    for (std::size_t q = 0; q < data_.size(); ++q) out.data_[q] += other.data_[q];
    return out;
}

ConnectionDelta ConnectionDelta::operator-(const ConnectionDelta& other) const {
    return *this + (-other);
}

ConnectionDelta ConnectionDelta::operator*(double s) const {
    ConnectionDelta out(*this);
    for (double& v : out.data_) v *= s;
    return out;
}

double ConnectionDelta::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace cdouglas
