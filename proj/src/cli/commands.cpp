#include "cdouglas/cli/commands.hpp"

#include "cdouglas/douglas2d/classification.hpp"
#include "cdouglas/douglas2d/conditions.hpp"
#include "cdouglas/douglas2d/ode.hpp"
#include "cdouglas/geoverify/douglas_check.hpp"
#include "cdouglas/prolong_nd/solve.hpp"

#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

namespace cdouglas::cli {

namespace {

using nlohmann::json;

json quadruple_json(const douglas2d::Quadruple& k) { return json::array({k.k0, k.k1, k.k2, k.k3}); }

// Shared error mapping for every command.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    }
}

}  // namespace

json classify_report(const QuadrupleInput& in, double tol) {
    using namespace douglas2d;
    const Classification cls = classify_quadruple(in.k, tol);
    json r;
    r["K"] = quadruple_json(in.k);
    r["verdict"] = cls.admissible() ? "admissible" : "inadmissible";
    r["failure"] = to_string(cls.failure);
    r["diagnostic"] = cls.diagnostic;
    if (in.k.k3 != 0.0) {
        r["A"] = cls.a;
        r["C"] = cls.c;
    }
    if (cls.admissible()) r["gnorm"] = to_json(Mat(cls.gnorm));
    if (in.g) {
        const Eigen::Matrix2d gn = *in.g / (*in.g)(1, 1);
        r["gInputNormalized"] = to_json(Mat(gn));
        r["roundTripError"] = cls.admissible() ? (cls.gnorm - gn).cwiseAbs().maxCoeff() : -1.0;
    }
    const ConditionA ca = condition_a_integral(in.k, tol);
    const RootAnalysis& rb = ca.roots;
    json b;
    b["bounded"] = rb.bounded;
    b["boundedAtVertical"] = rb.bounded_at_vertical;
    b["degree"] = rb.degree;
    json roots = json::array();
    for (const auto& z : rb.roots) roots.push_back(json::array({z.real(), z.imag()}));
    b["roots"] = roots;
    b["realRoots"] = rb.real_roots;
    b["numeratorAtRealRoots"] = rb.numerator_at_real_roots;
    b["diagnostic"] = rb.diagnostic;
    r["conditionB"] = b;
    json a;
    a["convergent"] = ca.convergent;
    if (ca.convergent) {
        a["value"] = ca.value;
        a["errorEstimate"] = ca.error_estimate;
    }
    a["satisfied"] = ca.satisfied();
    a["diagnostic"] = ca.diagnostic;
    r["conditionA"] = a;
    return r;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        cfg.validate();
        const json input = load_json(cfg.input);
        const QuadrupleInput q = parse_quadruple_input(input);
        const double tol = cfg.tol.value_or(get_double(input, "tol", douglas2d::kDefaultClassificationTol));
        const json r = classify_report(q, tol);
        write_json(cfg.output_directory() / "classify.json", r);
        const bool ok = r["verdict"] == "admissible";
        out << "verdict: " << r["verdict"].get<std::string>() << "\n";
        if (ok) {
            out << "A: " << format_double(r["A"].get<double>()) << "\n";
            out << "C: " << format_double(r["C"].get<double>()) << "\n";
            const json& g = r["gnorm"];
            out << "gnorm: [[" << format_double(g[0][0].get<double>()) << ", " << format_double(g[0][1].get<double>())
                << "], [" << format_double(g[1][0].get<double>()) << ", " << format_double(g[1][1].get<double>())
                << "]]\n";
        } else {
            out << "reason: " << r["diagnostic"].get<std::string>() << "\n";
        }
        out << "condition B: " << r["conditionB"]["diagnostic"].get<std::string>() << "\n";
        out << "condition A: " << r["conditionA"]["diagnostic"].get<std::string>() << "\n";
        return ok ? kSuccess : kNegativeVerdict;
    });
}

int cmd_solve_ode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using namespace douglas2d;
    return guarded(err, [&] {
        cfg.validate();
        const json input = load_json(cfg.input);
        const QuadrupleInput q = parse_quadruple_input(input);
        const double c1 = get_double(input, "const1", 1.0);
        const double c2 = get_double(input, "const2", 0.0);
        const int res = get_int(input, "resolution", PeriodicProfile::kDefaultResolution);
        if (res < 8 || res % 2 != 0) throw InputError("resolution must be an even integer >= 8");
        if (!(c1 > 0.0)) throw InputError("const1 must be positive");
        const double tol = cfg.tol.value_or(get_double(input, "tol", kDefaultClassificationTol));
        const Classification cls = classify_quadruple(q.k, tol);
        const auto dir = cfg.output_directory();
        json summary;
        summary["K"] = quadruple_json(q.k);
        summary["verdict"] = cls.admissible() ? "admissible" : "inadmissible";
        if (!cls.admissible()) {
            summary["failure"] = to_string(cls.failure);
            write_json(dir / "solve_ode.json", summary);
            out << "verdict: inadmissible (" << to_string(cls.failure) << ")\n";
            return static_cast<int>(kNegativeVerdict);
        }
        const OdeSolution sol = general_solution(cls, c1, c2, res);
        const PeriodicProfile& f = sol.profile;
        const std::vector<double> resid = ode_residual(f, q.k);
        const std::vector<double> d1 = f.grid_derivative(1);
        const std::vector<double> d2 = f.grid_derivative(2);
        std::ostringstream csv;
        csv << "theta,f,df,convexity,residual\n";
        for (int i = 0; i < f.resolution(); ++i) {
            csv << format_double(f.theta(i)) << ',' << format_double(f.samples()[i]) << ','
                << format_double(d1[i]) << ',' << format_double(d2[i] + f.samples()[i]) << ','
                << format_double(resid[i]) << '\n';
        }
        write_text(dir / "profile.csv", csv.str());
        const ProfileChecks checks = check_profile(f);
        summary["const1"] = c1;
        summary["const2"] = c2;
        summary["resolution"] = res;
        summary["gnorm"] = to_json(Mat(cls.gnorm));
        summary["maxResidual"] = max_abs(resid);
        summary["minValue"] = checks.min_value;
        summary["minConvexity"] = checks.min_convexity;
        summary["positive"] = checks.positive();
        summary["strictlyConvex"] = checks.strictly_convex();
        write_json(dir / "solve_ode.json", summary);
        out << "verdict: admissible\nmax residual: " << format_double(max_abs(resid)) << "\n";
        return static_cast<int>(kSuccess);
    });
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using namespace prolong;
    return guarded(err, [&] {
        cfg.validate();
        const json input = load_json(cfg.input);
        if (!input.is_object()) throw InputError("input must be a JSON object");
        if (!input.contains("T") || !input.contains("sigma")) throw InputError("input needs \"T\" and \"sigma\"");
        const ConnectionDelta t = parse_delta(input.at("T"), "T");
        const Vec sigma = parse_vector(input.at("sigma"), "sigma");
        const int n = get_int(input, "n", t.dimension());
        if (n != t.dimension()) throw InputError("n does not match the dimension of T");
        const int degree = get_int(input, "L", 6);
        const int grid_size = get_int(input, "gridSize", 0);
        std::uint64_t seed = static_cast<std::uint64_t>(get_int(input, "seed", 0));
        if (cfg.seed) seed = *cfg.seed;
        Mat reference;
        if (input.contains("basisReference")) reference = parse_matrix(input.at("basisReference"), "basisReference");
        const ProlongationProblem prob =
            ProlongationProblem::create(t, sigma, degree, grid_size, seed, reference);
        SolveOptions opts;
        if (cfg.tol) opts.kernel_threshold = *cfg.tol;
        const ProlongationSolution sol = assemble_and_solve(prob, opts);

        json r;
        r["n"] = n;
        r["L"] = degree;
        r["gridSize"] = static_cast<int>(prob.grid.size());
        r["seed"] = seed;
        r["basisSize"] = static_cast<int>(sol.kernel.rows());
        r["residual"] = sol.residual;
        r["kernelDimension"] = sol.kernel_dimension;
        r["nontrivialKernelDimension"] = sol.nontrivial_kernel_dimension;
        r["basisCondition"] = sol.basis_condition;
        r["degeneratePoints"] = sol.degenerate_points;
        json elems = json::array();
        for (const KernelElement& e : sol.elements) {
            json je;
            je["coefficients"] = to_json(e.coefficients);
            je["convexity"] = {{"positive", e.convexity.positive},
                               {"strictlyConvex", e.convexity.strictly_convex},
                               {"minValue", e.convexity.min_value},
                               {"minEigenvalue", e.convexity.min_eigenvalue}};
            je["ellipsoidResidual"] = e.ellipsoid.residual;
            je["linearSubtractedResidual"] = e.linear_subtracted_residual;
            je["counterexampleCandidate"] = e.alarm;
            elems.push_back(je);
        }
        r["perKernelElement"] = elems;
        r["counterexampleCandidate"] = sol.counterexample_candidate;
        const auto dir = cfg.output_directory();
        write_json(dir / "search.json", r);
        std::ostringstream csv;
        csv << "index,singular_value\n";
        for (Eigen::Index k = 0; k < sol.singular_values.size(); ++k) {
            csv << k << ',' << format_double(sol.singular_values[k]) << '\n';
        }
        write_text(dir / "singular_values.csv", csv.str());
        out << "kernel dimension: " << sol.kernel_dimension << " (nontrivial "
            << sol.nontrivial_kernel_dimension << ")\n";
        if (sol.counterexample_candidate) out << "COUNTEREXAMPLE-CANDIDATE\n";
        return static_cast<int>(kSuccess);
    });
}

namespace {

ScalarField parse_exponent(const json& j, int n) {
    if (j.is_null()) return ScalarField::zero(n);
    const std::string type = j.value("type", "linear");
    if (type == "zero") return ScalarField::zero(n);
    if (type == "linear") {
        const Vec c = parse_vector(j.at("covector"), "covector");
        if (c.size() != n) throw InputError("exponent covector dimension mismatch");
        return ScalarField::linear(c);
    }
    throw InputError("unknown exponent type " + type);
}

HomogeneousFn parse_norm(const json& j, int n) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "euclidean") return euclidean_norm();
    if (type == "quadratic") {
        const Mat g = parse_matrix(j.at("g"), "g");
        if (g.rows() != n || !is_positive_definite(g)) throw InputError("norm g must be SPD of dimension n");
        return quadratic_norm(g);
    }
    if (type == "randers") {
        const Mat g = parse_matrix(j.at("g"), "g");
        const Vec b = parse_vector(j.at("b"), "b");
        if (g.rows() != n || b.size() != n) throw InputError("randers norm dimension mismatch");
        return randers_norm(g, b);
    }
    throw InputError("unknown norm type " + type);
}

std::shared_ptr<MetricField> parse_metric(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "randers") {
        const Mat g = parse_matrix(j.at("g"), "g");
        const int n = static_cast<int>(g.rows());
        const Vec b = j.contains("b") ? parse_vector(j.at("b"), "b") : Vec(Vec::Zero(n));
        if (b.size() != n) throw InputError("randers b dimension mismatch");
        return std::make_shared<RandersField>(g, b, parse_exponent(j.value("exponent", json()), n));
    }
    if (type == "conformal_minkowski") {
        const Vec sigma = parse_vector(j.at("sigma"), "sigma");
        const int n = static_cast<int>(sigma.size());
        return std::make_shared<ConformalMinkowskiField>(parse_norm(j.at("norm"), n), sigma);
    }
    throw InputError("unknown metric type " + type);
}

geo::AffineConnection parse_connection(const json& j, int n) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "zero") return geo::AffineConnection::zero(n);
    if (type == "constant") {
        ConnectionDelta gamma = parse_delta(j.at("gamma"), "gamma");
        if (gamma.dimension() != n) throw InputError("connection dimension mismatch");
        return geo::AffineConnection::constant(std::move(gamma));
    }
    if (type == "quadruple") {
        if (n != 2) throw InputError("quadruple connection needs n = 2");
        const Vec k = parse_vector(j.at("K"), "K");
        if (k.size() != 4) throw InputError("K must have four entries");
        ConnectionDelta t = douglas2d::delta_from_quadruple({k[0], k[1], k[2], k[3]});
        if (j.value("negate", false)) t = -t;
        return geo::AffineConnection::constant(std::move(t));
    }
    if (type == "levi_civita") {
        const Mat g = parse_matrix(j.at("g"), "g");
        if (g.rows() != n || !is_positive_definite(g)) throw InputError("connection g must be SPD of dimension n");
        return geo::AffineConnection::levi_civita(
            RiemannianMetricField::conformal(g, parse_exponent(j.value("exponent", json()), n)));
    }
    throw InputError("unknown connection type " + type);
}

}  // namespace

int cmd_verify_geodesics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        cfg.validate();
        const json input = load_json(cfg.input);
        if (!input.is_object() || !input.contains("metric") || !input.contains("connection")) {
            throw InputError("scenario needs \"metric\" and \"connection\"");
        }
        const auto field = parse_metric(input.at("metric"));
        const int n = field->dimension();
        const geo::AffineConnection conn = parse_connection(input.at("connection"), n);
        geo::DouglasSampler sampler;
        const json s = input.value("sampler", json::object());
        sampler.base_points = get_int(s, "basePoints", sampler.base_points);
        sampler.directions = get_int(s, "directions", sampler.directions);
        sampler.seed = static_cast<std::uint64_t>(get_int(s, "seed", 0));
        if (cfg.seed) sampler.seed = *cfg.seed;
        sampler.lower = get_double(s, "lower", sampler.lower);
        sampler.upper = get_double(s, "upper", sampler.upper);
        sampler.path_checks = get_int(s, "pathChecks", sampler.path_checks);
        sampler.path_t_end = get_double(s, "tEnd", sampler.path_t_end);
        sampler.path_tol = get_double(s, "integratorTol", sampler.path_tol);
        if (!(sampler.path_tol > 0.0) || !(sampler.path_t_end > 0.0)) throw InputError("sampler tolerances must be positive");
        const double tol = cfg.tol.value_or(get_double(input, "tolerance", geo::kDefaultDouglasTol));
        const geo::DouglasReport rep = geo::douglas_check(*field, conn, sampler, tol);

        json r;
        r["douglas"] = rep.douglas;
        r["maxResidual"] = rep.max_residual;
        r["maxPathDeviation"] = rep.max_path_deviation;
        r["samples"] = rep.samples;
        r["paths"] = rep.paths;
        r["skipped"] = rep.skipped;
        r["tolerance"] = rep.tolerance;
        r["seed"] = sampler.seed;
        const auto dir = cfg.output_directory();
        write_json(dir / "verify_geodesics.json", r);

        // trace dump from the center of the box for plotting
        std::ostringstream csv;
        csv << "path,kind,t";
        for (int i = 0; i < n; ++i) csv << ",x" << i + 1;
        csv << '\n';
        const Vec x0 = Vec::Constant(n, 0.5 * (sampler.lower + sampler.upper));
        const int dirs = std::max(1, sampler.path_checks);
        for (int d = 0; d < dirs; ++d) {
            Vec y0 = Vec::Zero(n);
            const double a = 2.0 * kPi * d / dirs;
            y0[0] = std::cos(a);
            y0[1 % n] += std::sin(a);
            if (y0.norm() == 0.0) y0[0] = 1.0;
            y0.normalize();
            const geo::GeodesicPath pf = geo::integrate_finsler_geodesic(*field, x0, y0, sampler.path_t_end, sampler.path_tol, 51);
            const geo::GeodesicPath pa = geo::integrate_affine_geodesic(conn, x0, y0, sampler.path_t_end, sampler.path_tol, 51);
            for (const auto* p : {&pf, &pa}) {
                const char* kind = p == &pf ? "finsler" : "affine";
                for (std::size_t k = 0; k < p->t.size(); ++k) {
                    csv << d << ',' << kind << ',' << format_double(p->t[k]);
                    for (int i = 0; i < n; ++i) csv << ',' << format_double(p->x[k][i]);
                    csv << '\n';
                }
            }
        }
        write_text(dir / "paths.csv", csv.str());
        out << "douglas: " << (rep.douglas ? "pass" : "fail") << "\nmax residual: "
            << format_double(rep.max_residual) << "\nmax path deviation: "
            << format_double(rep.max_path_deviation) << "\n";
        return static_cast<int>(rep.douglas ? kSuccess : kNegativeVerdict);
    });
}

}  // namespace cdouglas::cli
