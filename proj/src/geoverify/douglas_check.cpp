#include "cdouglas/geoverify/douglas_check.hpp"

#include "cdouglas/finsler_core/spray.hpp"

#include <algorithm>
#include <random>

namespace cdouglas::geo {

DouglasReport douglas_check(const MetricField& field, const AffineConnection& conn,
                            const DouglasSampler& sampler, double tol) {
    const int n = field.dimension();
    if (conn.dimension() != n) throw DomainError("douglas_check: dimension mismatch");
    if (sampler.base_points < 1 || sampler.directions < 1) throw DomainError("douglas_check: empty sampler");
    if (!(tol > 0.0)) throw DomainError("douglas_check: tolerance must be positive");
    std::mt19937_64 rng(sampler.seed);
    std::uniform_real_distribution<double> box(sampler.lower, sampler.upper);
    std::normal_distribution<double> normal(0.0, 1.0);

    DouglasReport r;
    r.tolerance = tol;
    for (int b = 0; b < sampler.base_points; ++b) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = box(rng);
        for (int d = 0; d < sampler.directions; ++d) {
            Vec y(n);
            for (int i = 0; i < n; ++i) y[i] = normal(rng);
            y.normalize();
            ++r.samples;
            double res = 0.0;
            try {
                res = projective_residual(spray(field, x, y), conn.at(x), y);
            } catch (const SingularDirectionError&) {
                ++r.skipped;
                continue;
            } catch (const DegenerateMetricError&) {
                ++r.skipped;
                continue;
            }
            r.max_residual = std::max(r.max_residual, res);
            if (r.paths < sampler.path_checks) {
                const GeodesicPath pf =
                    integrate_finsler_geodesic(field, x, y, sampler.path_t_end, sampler.path_tol);
                const GeodesicPath pa =
                    integrate_affine_geodesic(conn, x, y, sampler.path_t_end, sampler.path_tol);
                r.max_path_deviation = std::max(r.max_path_deviation, path_projective_match(pf, pa));
                ++r.paths;
            }
        }
    }
    r.douglas = r.skipped < r.samples && r.max_residual < tol && r.max_path_deviation < tol;
    return r;
}

}  // namespace cdouglas::geo
