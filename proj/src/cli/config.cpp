#include "cdouglas/cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cdouglas::cli {

std::filesystem::path RunConfig::output_directory() const {
    std::filesystem::path dir;
    if (!out_dir.empty()) {
        dir = out_dir;
    } else if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') {
        dir = env;
    } else {
        dir = ".";
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw InputError("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

void RunConfig::validate() const {
    if (input.empty()) throw InputError("--input is required");
    if (tol && !(*tol > 0.0)) throw InputError("--tol must be positive");
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

namespace {

double as_number(const nlohmann::json& v, const std::string& what) {
    if (!v.is_number()) throw InputError(what + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw InputError(what + " must be finite");
    return d;
}

}  // namespace

double get_double(const nlohmann::json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    return as_number(j.at(key), key);
}

int get_int(const nlohmann::json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw InputError(std::string(key) + " must be an integer");
    return v.get<int>();
}

Vec parse_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw InputError(std::string(what) + " must be a non-empty array");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = as_number(j[i], what);
    return v;
}

Mat parse_matrix(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw InputError(std::string(what) + " must be a non-empty nested array");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw InputError(std::string(what) + " must be a nested array");
    const std::size_t cols = j[0].size();
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw InputError(std::string(what) + " has ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = as_number(j[r][c], what);
    }
    return m;
}

ConnectionDelta parse_delta(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw InputError(std::string(what) + " must be an n x n x n nested array");
    const std::size_t n = j.size();
    std::vector<std::vector<std::vector<double>>> data(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Mat slice = parse_matrix(j[i], what);
        if (static_cast<std::size_t>(slice.rows()) != n || static_cast<std::size_t>(slice.cols()) != n) {
            throw InputError(std::string(what) + " must be an n x n x n nested array");
        }
        data[i].assign(n, std::vector<double>(n));
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) data[i][a][b] = slice(a, b);
        }
    }
    try {
        return ConnectionDelta::from_nested(data);
    } catch (const DomainError& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

QuadrupleInput parse_quadruple_input(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("input must be a JSON object");
    QuadrupleInput q;
    if (j.contains("K")) {
        const Vec k = parse_vector(j.at("K"), "K");
        if (k.size() != 4) throw InputError("K must have four entries");
        q.k = {k[0], k[1], k[2], k[3]};
        return q;
    }
    if (j.contains("g")) {
        const Mat g = parse_matrix(j.at("g"), "g");
        if (g.rows() != 2 || g.cols() != 2) throw InputError("g must be 2 x 2");
        try {
            q.k = douglas2d::metric_to_quadruple(g);
        } catch (const DomainError& e) {
            throw InputError(std::string("g: ") + e.what());
        }
        q.g = Eigen::Matrix2d(g);
        return q;
    }
    throw InputError("input needs \"K\" or \"g\"");
}

nlohmann::json to_json(const Vec& v) {
    nlohmann::json j = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
    return j;
}

nlohmann::json to_json(const Mat& m) {
    nlohmann::json j = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        j.push_back(row);
    }
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    write_text(path, j.dump(2) + "\n");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace cdouglas::cli
