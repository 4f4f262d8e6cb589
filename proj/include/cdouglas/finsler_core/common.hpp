#pragma once

#include <Eigen/Dense>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cdouglas {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the input was violated (zero vector, wrong dimension, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The fundamental tensor failed the positive-definiteness test.
class SingularDirectionError : public Error {
public:
    using Error::Error;
};

/// The fundamental tensor is numerically singular and cannot be inverted.
class DegenerateMetricError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure did not converge or a basis is ill conditioned.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Two independent routes to the same verdict disagree.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// Scale-free positive-definiteness: smallest eigenvalue > rel_tol * largest.
bool is_positive_definite(const Mat& m, double rel_tol = 1e-9);

/// Smallest eigenvalue of the symmetric part of m.
double min_symmetric_eigenvalue(const Mat& m);

}  // namespace cdouglas
