#include "cdouglas/prolong_nd/problem.hpp"

#include <cmath>
#include <random>

namespace cdouglas::prolong {

std::vector<Vec> sphere_grid(int dimension, int count, std::uint64_t seed) {
    if (dimension < 2) throw DomainError("sphere grid needs dimension >= 2");
    if (count < 2 || count % 2 != 0) throw DomainError("sphere grid size must be a positive even number");
    std::vector<Vec> grid;
    grid.reserve(count);
    const int half = count / 2;
    if (dimension == 2) {
        for (int k = 0; k < count; ++k) {
            const double t = 2.0 * kPi * (k + 0.5) / count;
            Vec y(2);
            y << std::cos(t), std::sin(t);
            grid.push_back(y);
        }
        return grid;
    }
    if (dimension == 3) {
        const double golden = kPi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < half; ++i) {
            const double z = (i + 0.5) / half;
            const double r = std::sqrt(1.0 - z * z);
            const double phi = golden * i;
            Vec y(3);
            y << r * std::cos(phi), r * std::sin(phi), z;
            grid.push_back(y);
        }
    } else {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (int i = 0; i < half; ++i) {
            Vec y(dimension);
            for (int a = 0; a < dimension; ++a) y[a] = normal(rng);
            grid.push_back(y.normalized());
        }
    }
    for (int i = 0; i < half; ++i) grid.push_back(-grid[i]);
    return grid;
}

ProlongationProblem ProlongationProblem::create(ConnectionDelta delta, Vec sigma, int degree,
                                                int grid_size, std::uint64_t seed,
                                                Mat basis_reference, bool allow_large) {
    const int n = delta.dimension();
    if (n < 3) throw DomainError("prolongation problem needs dimension n >= 3");
    if (n > kMaxDefaultDimension && !allow_large) {
        throw DomainError("prolongation problem dimension is capped at 4");
    }
    if (sigma.size() != n) throw DomainError("sigma must have the same dimension as T");
    if (!(sigma.norm() > 0.0)) throw DomainError("sigma must be a nonzero covector");
    if (degree < 1) throw DomainError("basis degree must be >= 1");
    ProlongationProblem p;
    p.dimension = n;
    p.delta = std::move(delta);
    p.sigma = std::move(sigma);
    p.degree = degree;
    if (grid_size <= 0) grid_size = n == 3 ? 500 : 1500;
    p.grid = sphere_grid(n, grid_size, seed);
    p.basis_reference = basis_reference.size() == 0 ? Mat::Identity(n, n) : std::move(basis_reference);
    if (p.basis_reference.rows() != n || !is_positive_definite(p.basis_reference)) {
        throw DomainError("basis reference form must be an n x n positive-definite matrix");
    }
    return p;
}

ConnectionDelta simple_delta(int dimension) {
    ConnectionDelta t(dimension);
    for (int j = 0; j < dimension; ++j) t.set(0, j, j, 1.0);
    return t;
}

ConnectionDelta randers_delta(const Mat& g, const Vec& sigma) {
    const int n = static_cast<int>(sigma.size());
    if (g.rows() != n || g.cols() != n) throw DomainError("randers_delta: dimension mismatch");
    const Vec up = g.ldlt().solve(sigma);
    ConnectionDelta t(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = j; k < n; ++k) {
                double v = g(j, k) * up[i];
                if (i == j) v -= sigma[k];
                if (i == k) v -= sigma[j];
                t.set(i, j, k, v);
            }
        }
    }
    return t;
}

}  // namespace cdouglas::prolong
