#include "cdouglas/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace cdouglas::cli;
    CLI::App app{"cdouglas: conformally related Douglas metrics toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::uint64_t seed = 0;
    double tol = 0.0;
    struct Entry {
        const char* name;
        const char* help;
        int (*fn)(const RunConfig&, std::ostream&, std::ostream&);
    };
    const Entry entries[] = {
        {"classify", "classify a quadruple K or a 2x2 metric g", cmd_classify},
        {"solve-ode", "emit the general periodic solution for an admissible K", cmd_solve_ode},
        {"search", "assemble and solve the prolongation system on the sphere", cmd_search},
        {"verify-geodesics", "check a metric against a connection (projective equivalence)", cmd_verify_geodesics},
    };
    int exit_code = kSuccess;
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        sub->add_option("--input", cfg.input, "input JSON file")->required();
        sub->add_option("--out", cfg.out_dir, "output directory (default $CDOUGLAS_OUT_DIR or .)");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--tol", tol, "tolerance override");
        sub->callback([&, e, sub] {
            if (sub->count("--seed") > 0) cfg.seed = seed;
            if (sub->count("--tol") > 0) cfg.tol = tol;
            exit_code = e.fn(cfg, std::cout, std::cerr);
        });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }
    return exit_code;
}
