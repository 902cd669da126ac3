#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bvp.hpp"
#include "config.hpp"
#include "hardy.hpp"

namespace bcdisk {

inline constexpr const char* polyfield_tag = "# bcdisk-polyfield v1";
inline constexpr const char* fourier_tag = "# bcdisk-fourier v1";

namespace detail {

inline std::vector<std::vector<double>> read_rows(std::istream& in, const std::string& tag, const std::string& what) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != tag) throw std::invalid_argument(what + ": missing header '" + tag + "'");
    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::istringstream ls{std::string(t)};
        std::vector<double> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_double(tok, what + " line " + std::to_string(lineno)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline int as_index(double v, const std::string& what) {
    if (v != std::floor(v) || std::abs(v) > 1e6) throw std::invalid_argument(what + ": index must be an integer");
    return static_cast<int>(v);
}

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << std::setprecision(17);
    return out;
}

}  // namespace detail

/// Rows `m n re(sc) im(sc) re(vec) im(vec)` after the version header.
inline PolyField read_polyfield(std::istream& in) {
    PolyField f;
    for (const auto& r : detail::read_rows(in, polyfield_tag, "polyfield")) {
        if (r.size() != 6) throw std::invalid_argument("polyfield: expected 6 columns per row");
        const int m = detail::as_index(r[0], "polyfield"), n = detail::as_index(r[1], "polyfield");
        if (m < 0 || n < 0) throw std::invalid_argument("polyfield: negative exponent");
        f.add(m, n, Bicomplex(cplx(r[2], r[3]), cplx(r[4], r[5])));
    }
    return f;
}

inline void write_polyfield(std::ostream& out, const PolyField& f) {
    out << polyfield_tag << '\n' << std::setprecision(17);
    for (const auto& [k, c] : f.terms())
        out << k.first << ' ' << k.second << ' ' << c.sc().real() << ' ' << c.sc().imag() << ' ' << c.vec().real()
            << ' ' << c.vec().imag() << '\n';
}

/// Rows `k re im` (complex) or `k re(sc) im(sc) re(vec) im(vec)` (bicomplex).
inline BicomplexBoundary read_fourier(std::istream& in) {
    std::map<int, Bicomplex> m;
    for (const auto& r : detail::read_rows(in, fourier_tag, "fourier")) {
        const int k = detail::as_index(r.at(0), "fourier");
        if (r.size() == 3) m[k] += Bicomplex(cplx(r[1], r[2]));
        else if (r.size() == 5) m[k] += Bicomplex(cplx(r[1], r[2]), cplx(r[3], r[4]));
        else throw std::invalid_argument("fourier: expected 3 or 5 columns per row");
    }
    return BicomplexBoundary::from_fourier(m);
}

/// Complex data; rejects rows with a vector part.
inline ComplexBoundary read_complex_fourier(std::istream& in) {
    std::map<int, cplx> m;
    const BicomplexBoundary g = read_fourier(in);
    for (const auto& [k, c] : g.coefficients()) {
        if (c.vec() != cplx{}) throw std::invalid_argument("fourier: complex data expected");
        m[k] = c.sc();
    }
    return ComplexBoundary::from_fourier(m);
}

inline void write_fourier(std::ostream& out, const ComplexBoundary& g) {
    out << fourier_tag << '\n' << std::setprecision(17);
    for (const auto& [k, c] : g.coefficients()) out << k << ' ' << c.real() << ' ' << c.imag() << '\n';
}

inline void write_fourier(std::ostream& out, const BicomplexBoundary& g) {
    out << fourier_tag << '\n' << std::setprecision(17);
    for (const auto& [k, c] : g.coefficients())
        out << k << ' ' << c.sc().real() << ' ' << c.sc().imag() << ' ' << c.vec().real() << ' ' << c.vec().imag()
            << '\n';
}

inline PolyField load_polyfield(const std::string& path) {
    auto in = detail::open_in(path);
    return read_polyfield(in);
}

inline BicomplexBoundary load_fourier(const std::string& path) {
    auto in = detail::open_in(path);
    return read_fourier(in);
}

inline ComplexBoundary load_complex_fourier(const std::string& path) {
    auto in = detail::open_in(path);
    return read_complex_fourier(in);
}

inline nlohmann::json sample_json(double r, double theta, const Bicomplex& v) {
    return {{"r", r}, {"theta", theta}, {"sc_re", v.sc().real()}, {"sc_im", v.sc().imag()},
            {"vec_re", v.vec().real()}, {"vec_im", v.vec().imag()}};
}

/// Samples on a small polar grid: radii 0.25, 0.5, 0.75, 0.9 and n_theta angles.
inline nlohmann::json solution_samples(const BicomplexField& w, int n_theta = 8) {
    nlohmann::json out = nlohmann::json::array();
    if (!w) return out;
    for (double r : {0.25, 0.5, 0.75, 0.9})
        for (int t = 0; t < n_theta; ++t) {
            const double th = 2.0 * std::numbers::pi * t / n_theta;
            out.push_back(sample_json(r, th, w(std::polar(r, th))));
        }
    return out;
}

namespace detail {

/// JSON has no infinity; unavailable measurements become null.
inline nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

}  // namespace detail

inline nlohmann::json report_json(const SolveReport& r) {
    nlohmann::json j;
    j["verdict"] = r.verdict();
    j["pde_residual_max"] = detail::finite_or_null(r.pde_residual_max);
    j["boundary_error"] = detail::finite_or_null(r.boundary_error);
    j["boundary_gap_raw"] = detail::finite_or_null(r.boundary_gap_raw);
    j["constraint_error"] = detail::finite_or_null(r.constraint_error);
    j["series_terms_used"] = r.series_terms_used;
    j["converged"] = r.converged;
    j["message"] = r.message;
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [k, v] : r.diagnostics) d[k] = detail::finite_or_null(v);
    j["diagnostics"] = d;
    j["samples"] = solution_samples(r.solution);
    return j;
}

/// CSV with columns r,mean_p,gap_p; gap_p is empty when the profile has no gaps.
inline void write_profile_csv(std::ostream& out, const RadialProfile& p) {
    out << "r,mean_p,gap_p\n" << std::setprecision(17);
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
        out << p.radii[i] << ',' << p.means[i] << ',';
        if (i < p.gaps.size()) out << p.gaps[i];
        out << '\n';
    }
}

}  // namespace bcdisk
