#include "cdouglas/douglas2d/classification.hpp"

#include <cmath>
#include <sstream>

namespace cdouglas::douglas2d {

std::string to_string(ClassificationFailure f) {
    switch (f) {
        case ClassificationFailure::none: return "none";
        case ClassificationFailure::leading_coefficient_zero: return "leading-coefficient-zero";
        case ClassificationFailure::non_positive_n: return "non-positive-N";
        case ClassificationFailure::k0_mismatch: return "K0-mismatch";
        case ClassificationFailure::k1_mismatch: return "K1-mismatch";
    }
    return "unknown";
}

Classification classify_quadruple(const Quadruple& k, double tol) {
    Classification out;
    if (k.k3 == 0.0) {
        out.failure = ClassificationFailure::leading_coefficient_zero;
        out.diagnostic = "K3 = 0 contradicts positive definiteness (K3 = g22^2 / det > 0)";
        return out;
    }
    const double a = -k.k2 / (3.0 * k.k3) + 0.0;
    const double c = a * a + 1.0 / k.k3;
    out.a = a;
    out.c = c;
    out.b = a;
    out.d = -2.0 * a;
    out.n = c - a * a;
    out.e = 1.0 / (a * a - c);
    out.gnorm << c, 0.0 - a, 0.0 - a, 1.0;

    std::ostringstream msg;
    msg.precision(17);
    if (!(1.0 / k.k3 > 0.0)) {
        out.failure = ClassificationFailure::non_positive_n;
        msg << "N = C - A^2 = " << out.n << " <= 0";
        out.diagnostic = msg.str();
        return out;
    }
    const double denom = a * a - c;
    const double k0_expected = a * c / denom;
    const double k1_expected = 1.0 - 3.0 * a * a / denom;
    if (std::abs(k.k0 - k0_expected) > tol * (1.0 + std::abs(k.k0))) {
        out.failure = ClassificationFailure::k0_mismatch;
        msg << "K0 = " << k.k0 << " but AC/(A^2-C) = " << k0_expected;
        out.diagnostic = msg.str();
        return out;
    }
    if (std::abs(k.k1 - k1_expected) > tol * (1.0 + std::abs(k.k1))) {
        out.failure = ClassificationFailure::k1_mismatch;
        msg << "K1 = " << k.k1 << " but 1 - 3A^2/(A^2-C) = " << k1_expected;
        out.diagnostic = msg.str();
        return out;
    }
    out.verdict = Verdict::admissible;
    out.diagnostic = "admissible";
    return out;
}

}  // namespace cdouglas::douglas2d
