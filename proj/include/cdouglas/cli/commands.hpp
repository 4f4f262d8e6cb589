#pragma once

#include "cdouglas/cli/config.hpp"

#include <iosfwd>

namespace cdouglas::cli {

/// Each command reads cfg.input, writes its report files into the output
/// directory, prints a short summary to out and errors to err, and returns the
/// process exit code.
int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_solve_ode(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_geodesics(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Pure report builders used by the commands (no file output).
nlohmann::json classify_report(const QuadrupleInput& in, double tol);

}  // namespace cdouglas::cli
