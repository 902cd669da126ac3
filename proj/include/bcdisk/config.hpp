#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicomplex.hpp"

namespace bcdisk {

/// Failure to read or write a file, kept apart from numerical failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Settings of an acceptance run; every key can be set from a file or by `--set key=value`.
struct RunConfig {
    int n_r = 128;
    int n_theta = 512;
    double eps_factor = 0.01;
    double tol_pde = 1e-4;
    double tol_boundary = 1e-3;
    double tol_algebra = 1e-14;
    int series_cap = 40;
    std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
    std::string out_dir = ".";
    std::string summary = "suite_summary.json";
    std::uint64_t seed = 20240601;

    void set(const std::string& key, const std::string& value);
    void validate() const;
    std::map<std::string, std::string> entries() const;
};

namespace detail {

inline int parse_int(const std::string& s, const std::string& key) {
    const double v = parse_double(s, key);
    if (v != static_cast<int>(v)) throw std::invalid_argument(key + ": integer expected");
    return static_cast<int>(v);
}

inline std::vector<double> parse_list(const std::string& s, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(item, key));
    return out;
}

inline std::string join(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

inline std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace detail

inline void RunConfig::set(const std::string& key, const std::string& value) {
    if (key == "n_r") n_r = detail::parse_int(value, key);
    else if (key == "n_theta") n_theta = detail::parse_int(value, key);
    else if (key == "eps_factor") eps_factor = detail::parse_double(value, key);
    else if (key == "tol_pde") tol_pde = detail::parse_double(value, key);
    else if (key == "tol_boundary") tol_boundary = detail::parse_double(value, key);
    else if (key == "tol_algebra") tol_algebra = detail::parse_double(value, key);
    else if (key == "series_cap") series_cap = detail::parse_int(value, key);
    else if (key == "radii") radii = detail::parse_list(value, key);
    else if (key == "out_dir") out_dir = value;
    else if (key == "summary") summary = value;
    else if (key == "seed") {
        const std::string v(detail::trim(value));
        char* end = nullptr;
        seed = std::strtoull(v.c_str(), &end, 10);
        if (v.empty() || v.front() == '-' || end != v.c_str() + v.size()) throw std::invalid_argument("seed: unsigned integer expected");
    } else
        throw std::invalid_argument("unknown config key '" + key + "'");
}

/// Tolerances may be zero: a zero bound makes the matching criteria fail instead of aborting the run.
inline void RunConfig::validate() const {
    if (n_r < 1) throw std::invalid_argument("n_r must be positive");
    if (n_theta < 64 || (n_theta & (n_theta - 1)) != 0) throw std::invalid_argument("n_theta must be a power of two >= 64");
    if (!(eps_factor >= 0.0)) throw std::invalid_argument("eps_factor must be non-negative");
    for (double t : {tol_pde, tol_boundary, tol_algebra})
        if (!(t >= 0.0)) throw std::invalid_argument("tolerances must be non-negative");
    if (series_cap < 1) throw std::invalid_argument("series_cap must be positive");
    if (radii.empty()) throw std::invalid_argument("radii must be non-empty");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw std::invalid_argument("radii must lie in (0,1)");
        if (i > 0 && !(radii[i] > radii[i - 1])) throw std::invalid_argument("radii must increase");
    }
}

inline std::map<std::string, std::string> RunConfig::entries() const {
    return {{"n_r", std::to_string(n_r)},
            {"n_theta", std::to_string(n_theta)},
            {"eps_factor", detail::num(eps_factor)},
            {"tol_pde", detail::num(tol_pde)},
            {"tol_boundary", detail::num(tol_boundary)},
            {"tol_algebra", detail::num(tol_algebra)},
            {"series_cap", std::to_string(series_cap)},
            {"radii", detail::join(radii)},
            {"out_dir", out_dir},
            {"summary", summary},
            {"seed", std::to_string(seed)}};
}

/// Applies `key = value` lines; `#` starts a comment.
inline void apply_config(RunConfig& cfg, std::istream& in, const std::string& source = "config") {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const std::string_view t = detail::trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument(source + ":" + std::to_string(lineno) + ": expected key = value");
        cfg.set(std::string(detail::trim(t.substr(0, eq))), std::string(detail::trim(t.substr(eq + 1))));
    }
}

/// `key=value` override as given on the command line.
inline void apply_override(RunConfig& cfg, const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("override '" + kv + "' is not key=value");
    cfg.set(std::string(detail::trim(kv.substr(0, eq))), std::string(detail::trim(kv.substr(eq + 1))));
}

/**
 * @brief Defaults, then the config file (explicit path or BCDISK_CONFIG), then overrides.
 *
 * A missing explicit file is an error; an unset BCDISK_CONFIG is not.
 */
inline RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides,
                             const std::function<const char*(const char*)>& getenv =
                                 [](const char* k) -> const char* { return std::getenv(k); }) {
    RunConfig cfg;
    std::string file = path;
    if (file.empty())
        if (const char* env = getenv("BCDISK_CONFIG"); env && *env) file = env;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw IoError("cannot open config '" + file + "'");
        apply_config(cfg, in, file);
    }
    for (const auto& kv : overrides) apply_override(cfg, kv);
    cfg.validate();
    return cfg;
}

}  // namespace bcdisk
