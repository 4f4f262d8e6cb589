#pragma once

#include "cdouglas/douglas2d/quadruple.hpp"

#include <string>

namespace cdouglas::douglas2d {

enum class Verdict { admissible, inadmissible };

/// Which algebraic test rejected a quadruple.
enum class ClassificationFailure {
    none,
    leading_coefficient_zero,  ///< K3 = 0: the normalised g22 = 1 forces K3 = 1 / det > 0
    non_positive_n,            ///< N = C - A^2 = 1 / K3 <= 0
    k0_mismatch,               ///< K0 differs from AC / (A^2 - C)
    k1_mismatch,               ///< K1 differs from 1 - 3A^2 / (A^2 - C)
};

std::string to_string(ClassificationFailure f);

struct Classification {
    Verdict verdict = Verdict::inadmissible;
    ClassificationFailure failure = ClassificationFailure::none;
    std::string diagnostic;

    // Filled whenever K3 != 0; meaningful as a metric only when admissible.
    double a = 0.0;
    double c = 0.0;
    Eigen::Matrix2d gnorm = Eigen::Matrix2d::Zero();  ///< [[C, -A], [-A, 1]]

    // Derived constants of the factorisation (C + Dt + t^2)(B - t)E.
    double b = 0.0;  ///< B = A
    double d = 0.0;  ///< D = -2A
    double e = 0.0;  ///< E = 1 / (A^2 - C)
    double n = 0.0;  ///< N = C - A^2

    bool admissible() const { return verdict == Verdict::admissible; }
};

inline constexpr double kDefaultClassificationTol = 1e-8;

/// Decides whether K comes from a symmetric positive-definite matrix and, if so,
/// recovers the normalised representative [[C, -A], [-A, 1]].
Classification classify_quadruple(const Quadruple& k, double tol = kDefaultClassificationTol);

}  // namespace cdouglas::douglas2d
