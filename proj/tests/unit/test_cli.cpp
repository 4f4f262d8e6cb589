#include "cdouglas/cli/commands.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cdouglas::cli;
namespace fs = std::filesystem;

namespace {

std::string data(const char* name) { return std::string(CDOUGLAS_TEST_DATA) + "/" + name; }

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("cdouglas_cli_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class Cmd>
Run run(Cmd cmd, const char* input, const fs::path& dir) {
    RunConfig cfg;
    cfg.input = data(input);
    cfg.out_dir = dir.string();
    std::ostringstream out;
    std::ostringstream err;
    const int code = cmd(cfg, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify exit codes") {
    const fs::path dir = fresh_dir("classify");
    CHECK(run(cmd_classify, "classify_euclidean.json", dir).code == kSuccess);
    const nlohmann::json a = nlohmann::json::parse(slurp(dir / "classify.json"));
    CHECK(a["verdict"] == "admissible");
    CHECK(a["gnorm"][0][0].get<double>() == doctest::Approx(1.0));
    CHECK(std::abs(a["gnorm"][0][1].get<double>()) < 1e-12);

    const Run m = run(cmd_classify, "classify_metric.json", dir);
    CHECK(m.code == kSuccess);
    const nlohmann::json b = nlohmann::json::parse(slurp(dir / "classify.json"));
    CHECK(b["K"][0].get<double>() == doctest::Approx(-2.0));
    CHECK(b["K"][3].get<double>() == doctest::Approx(1.0));
    CHECK(b["roundTripError"].get<double>() < 1e-8);

    const Run n = run(cmd_classify, "classify_inadmissible.json", dir);
    CHECK(n.code == kNegativeVerdict);
    CHECK(n.out.find("inadmissible") != std::string::npos);

    const Run bad = run(cmd_classify, "malformed.json", dir);
    CHECK(bad.code == kInputError);
    CHECK_FALSE(bad.err.empty());
    CHECK(run(cmd_classify, "does_not_exist.json", dir).code == kInputError);
}

TEST_CASE("solve-ode writes the profile") {
    const fs::path dir = fresh_dir("solve");
    CHECK(run(cmd_solve_ode, "solve_ode.json", dir).code == kSuccess);
    const nlohmann::json s = nlohmann::json::parse(slurp(dir / "solve_ode.json"));
    CHECK(s["maxResidual"].get<double>() < 1e-10);
    CHECK(s["positive"].get<bool>());
    CHECK(s["strictlyConvex"].get<bool>());
    std::istringstream csv(slurp(dir / "profile.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "theta,f,df,convexity,residual");
    int rows = 0;
    while (std::getline(csv, line)) ++rows;
    CHECK(rows == 256);
    CHECK(run(cmd_solve_ode, "solve_ode_inadmissible.json", dir).code == kNegativeVerdict);
}

TEST_CASE("search exit codes") {
    const fs::path dir = fresh_dir("search");
    const Run r = run(cmd_search, "search_simple.json", dir);
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("COUNTEREXAMPLE-CANDIDATE") == std::string::npos);
    const nlohmann::json s = nlohmann::json::parse(slurp(dir / "search.json"));
    CHECK(s["kernelDimension"].get<int>() >= 2);
    CHECK(s["nontrivialKernelDimension"].get<int>() >= 1);
    CHECK(fs::exists(dir / "singular_values.csv"));
    CHECK(run(cmd_search, "search_n2.json", dir).code == kInputError);
    CHECK(run(cmd_search, "search_small_grid.json", dir).code == kNumericalFailure);
}

TEST_CASE("verify-geodesics exit codes") {
    const fs::path dir = fresh_dir("verify");
    CHECK(run(cmd_verify_geodesics, "verify_randers.json", dir).code == kSuccess);
    const nlohmann::json s = nlohmann::json::parse(slurp(dir / "verify_geodesics.json"));
    CHECK(s["douglas"].get<bool>());
    CHECK(s["paths"].get<int>() == 2);
    CHECK(run(cmd_verify_geodesics, "verify_quadruple.json", dir).code == kSuccess);
    CHECK(run(cmd_verify_geodesics, "verify_not_douglas.json", dir).code == kNegativeVerdict);
    CHECK(run(cmd_verify_geodesics, "classify_euclidean.json", dir).code == kInputError);
}

TEST_CASE("reports are byte-identical across runs") {
    const fs::path a = fresh_dir("det_a");
    const fs::path b = fresh_dir("det_b");
    for (const fs::path& d : {a, b}) {
        run(cmd_verify_geodesics, "verify_randers.json", d);
        run(cmd_solve_ode, "solve_ode.json", d);
        run(cmd_classify, "classify_metric.json", d);
    }
    for (const char* f : {"verify_geodesics.json", "paths.csv", "solve_ode.json", "profile.csv", "classify.json"}) {
        CHECK(slurp(a / f) == slurp(b / f));
        CHECK_FALSE(slurp(a / f).empty());
    }
}

TEST_CASE("output directory falls back to the environment") {
    const fs::path dir = fresh_dir("env");
    ::setenv(kOutDirEnv, dir.string().c_str(), 1);
    RunConfig cfg;
    cfg.input = data("classify_euclidean.json");
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_classify(cfg, out, err) == kSuccess);
    ::unsetenv(kOutDirEnv);
    CHECK(fs::exists(dir / "classify.json"));
}

TEST_CASE("non-positive tolerance is an input error") {
    RunConfig cfg;
    cfg.input = data("classify_euclidean.json");
    cfg.out_dir = fresh_dir("tol").string();
    cfg.tol = -1.0;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_classify(cfg, out, err) == kInputError);
}
