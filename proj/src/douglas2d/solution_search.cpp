#include "cdouglas/douglas2d/solution_search.hpp"

#include <algorithm>
#include <cmath>

namespace cdouglas::douglas2d {

namespace {

struct Candidate {
    double residual;
    Vec coefficients;
};

// Basis index -> harmonic: 0 -> constant, 2m-1 -> cos(2m t), 2m -> sin(2m t).
int harmonic(int idx) { return idx == 0 ? 0 : 2 * ((idx + 1) / 2); }
bool is_sine(int idx) { return idx > 0 && idx % 2 == 0; }

double basis_value(int idx, double t) {
    const int k = harmonic(idx);
    return is_sine(idx) ? std::sin(k * t) : std::cos(k * t);
}

double basis_d1(int idx, double t) {
    const int k = harmonic(idx);
    return is_sine(idx) ? k * std::cos(k * t) : -k * std::sin(k * t);
}

bool positive_and_convex(const Vec& f, const Vec& conv) {
    return f.minCoeff() > 0.0 && conv.minCoeff() > 0.0;
}

CollocationLevel solve_level(const Quadruple& kq, int modes, const CollocationOptions& opts,
                             std::optional<Candidate>& best) {
    const int unknowns = 2 * modes + 1;
    const int points = std::max(6 * modes, 3 * unknowns);
    Mat a(points, unknowns);
    for (int j = 0; j < points; ++j) {
        const double t = kPi * (j + 0.5) / points;
        const double p = p_polynomial(kq, t);
        const double c = std::cos(t);
        const double s = std::sin(t);
        for (int i = 0; i < unknowns; ++i) {
            const double k = harmonic(i);
            const double v = basis_value(i, t);
            a(j, i) = (1.0 - k * k) * v * p - v * s - c * basis_d1(i, t);
        }
    }
    // columns that vanish to rounding stay tiny instead of being blown up to unit norm
    Vec scale = a.colwise().norm().transpose();
    const double largest = scale.maxCoeff();
    for (int i = 0; i < unknowns; ++i) {
        if (!(scale[i] > 1e-10 * largest)) scale[i] = largest;
        a.col(i) /= scale[i];
    }
    Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinV);
    const Vec& sv = svd.singularValues();
    const Mat& v = svd.matrixV();

    CollocationLevel level;
    level.modes = modes;
    const int last = static_cast<int>(sv.size()) - 1;
    for (int q = 0; q < 4 && last - q >= 0; ++q) level.smallest_singular_values.push_back(sv[last - q]);
    for (int q = 0; q <= last; ++q)
        if (sv[q] <= opts.kernel_threshold) ++level.kernel_dimension;

    // Values of f and f'' + f on the check grid for the inspected directions.
    const int inspected = std::min(3, last + 1);
    Mat values(opts.check_points, inspected);
    Mat convexity(opts.check_points, inspected);
    {
        Mat coeffs(unknowns, inspected);
        for (int q = 0; q < inspected; ++q) coeffs.col(q) = v.col(last - q).cwiseQuotient(scale);
        Mat basis(opts.check_points, unknowns);
        Mat basis_conv(opts.check_points, unknowns);
        for (int j = 0; j < opts.check_points; ++j) {
            const double t = kPi * j / opts.check_points;
            for (int i = 0; i < unknowns; ++i) {
                const double k = harmonic(i);
                basis(j, i) = basis_value(i, t);
                basis_conv(j, i) = (1.0 - k * k) * basis(j, i);
            }
        }
        values = basis * coeffs;
        convexity = basis_conv * coeffs;
    }

    auto consider = [&](const Vec& weights, double residual) {
        if (residual >= level.qualifying_singular_value) return;
        const Vec f = values * weights;
        const Vec conv = convexity * weights;
        for (double sign : {1.0, -1.0}) {
            if (positive_and_convex(sign * f, sign * conv)) {
                level.qualifying_singular_value = residual;
                if (!best || residual < best->residual) {
                    Vec w = Vec::Zero(unknowns);
                    for (int q = 0; q < inspected; ++q) w += weights[q] * v.col(last - q);
                    best = Candidate{residual, sign * w.cwiseQuotient(scale)};
                }
                return;
            }
        }
    };

    // Small singular directions, singly and (for the two smallest) in combination.
    for (int q = 0; q < inspected; ++q) {
        if (sv[last - q] > opts.candidate_threshold) break;
        consider(Vec::Unit(inspected, q), sv[last - q]);
    }
    if (inspected >= 2 && sv[last - 1] <= opts.candidate_threshold) {
        for (int step = 0; step < 360; ++step) {
            const double phi = 2.0 * kPi * step / 360.0;
            Vec w = Vec::Zero(inspected);
            w[0] = std::cos(phi);
            w[1] = std::sin(phi);
            consider(w, std::hypot(w[0] * sv[last], w[1] * sv[last - 1]));
        }
    }
    return level;
}

}  // namespace

PeriodicProfile::Jet collocation_profile(const std::vector<double>& coefficients, double theta) {
    PeriodicProfile::Jet j;
    for (int i = 0; i < static_cast<int>(coefficients.size()); ++i) {
        const double k = harmonic(i);
        const double v = basis_value(i, theta);
        j.value += coefficients[i] * v;
        j.d1 += coefficients[i] * basis_d1(i, theta);
        j.d2 += -coefficients[i] * k * k * v;
    }
    return j;
}

CollocationReport collocation_search(const Quadruple& k, const CollocationOptions& opts) {
    CollocationReport report;
    std::optional<Candidate> best;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t lvl = 0; lvl < opts.mode_levels.size(); ++lvl) {
        const int modes = opts.mode_levels[lvl];
        std::optional<Candidate> level_best;
        const CollocationLevel level = solve_level(k, modes, opts, level_best);
        report.levels.push_back(level);
        if (level_best && (!best || level_best->residual <= best->residual)) {
            best = level_best;
            report.candidate_modes = modes;
        }
        if (level.qualifying_singular_value <= opts.kernel_threshold) break;
        // Keep refining only while the smallest residual is still converging.
        const double current = std::min(level.qualifying_singular_value,
                                        level.smallest_singular_values.front());
        if (lvl > 0 && current > 0.1 * previous) break;
        previous = current;
    }
    if (best) {
        report.qualifying_singular_value = best->residual;
        report.candidate_coefficients.assign(best->coefficients.data(),
                                             best->coefficients.data() + best->coefficients.size());
    }
    report.found = report.qualifying_singular_value <= opts.kernel_threshold;
    return report;
}

SolutionSearch periodic_solution_search(const Quadruple& k, const CollocationOptions& opts, double tol) {
    SolutionSearch out;
    out.algebraic = classify_quadruple(k, tol);
    out.numerical = collocation_search(k, opts);
    if (out.algebraic.admissible() != out.numerical.found) {
        throw InconsistencyError(
            std::string("algebraic and collocation verdicts disagree: algebraic ") +
            (out.algebraic.admissible() ? "admissible" : "inadmissible") + ", collocation " +
            (out.numerical.found ? "found" : "did not find") + " a positive convex periodic solution");
    }
    if (out.algebraic.admissible()) {
        OdeSolution sol = general_solution(out.algebraic, 1.0, 0.0);
        const ProfileChecks checks = check_profile(sol.profile);
        if (!checks.positive() || !checks.strictly_convex()) {
            throw InconsistencyError("solution of an admissible quadruple is not positive and convex");
        }
        out.solution = std::move(sol);
    }
    return out;
}

}  // namespace cdouglas::douglas2d
