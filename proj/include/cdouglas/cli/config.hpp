#pragma once

#include "cdouglas/douglas2d/quadruple.hpp"
#include "cdouglas/finsler_core/connection_delta.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace cdouglas::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kNegativeVerdict = 2, kNumericalFailure = 3 };

inline constexpr const char* kOutDirEnv = "CDOUGLAS_OUT_DIR";

/// Thrown for malformed input; maps to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string input;
    std::string out_dir;  ///< empty: CDOUGLAS_OUT_DIR, then the current directory
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;

    /// Creates the directory if needed.
    std::filesystem::path output_directory() const;
    /// Throws InputError on non-positive tolerance.
    void validate() const;
};

nlohmann::json load_json(const std::string& path);

double get_double(const nlohmann::json& j, const char* key, double fallback);
int get_int(const nlohmann::json& j, const char* key, int fallback);
Vec parse_vector(const nlohmann::json& j, const char* what);
Mat parse_matrix(const nlohmann::json& j, const char* what);
ConnectionDelta parse_delta(const nlohmann::json& j, const char* what);

/// {"K": [k0, k1, k2, k3]} or {"g": [[g11, g12], [g12, g22]]}; the matrix is
/// returned too when given.
struct QuadrupleInput {
    douglas2d::Quadruple k;
    std::optional<Eigen::Matrix2d> g;
};
QuadrupleInput parse_quadruple_input(const nlohmann::json& j);

nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const Mat& m);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);
/// "%.17g"
std::string format_double(double v);

}  // namespace cdouglas::cli
