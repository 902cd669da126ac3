#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "boundary.hpp"
#include "poly.hpp"
#include "quadrature.hpp"

namespace bcdisk {

inline std::vector<double> default_radii() { return {0.5, 0.9, 0.99, 0.999}; }

struct RadialProfile {
    double p = 2.0;
    std::vector<double> radii;
    std::vector<double> means;
    std::vector<double> gaps;  // empty when no boundary data was supplied
};

namespace detail {

inline void require_exponent(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("exponent must be positive");
}

inline void require_open_radius(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radius must lie in (0,1)");
}

inline void require_radii(const std::vector<double>& radii) {
    for (double r : radii) require_open_radius(r);
}

/// (1/2 pi \int e(theta)^p d theta)^{1/p} with the uniform rule; e is a pointwise magnitude.
template <class E>
double p_mean(const E& e, double p, int n_theta) {
    if (n_theta < 1) throw std::invalid_argument("n_theta must be positive");
    double s = 0.0;
    for (int t = 0; t < n_theta; ++t) s += std::pow(e(2.0 * std::numbers::pi * t / n_theta), p);
    return std::pow(s / n_theta, 1.0 / p);
}

}  // namespace detail

/// (1/2 pi \int ||w(r e^{i theta})||^p d theta)^{1/p}; ||.|| is |.| or the bicomplex norm.
template <class F>
double circle_mean(const F& w, double p, double r, int n_theta = 256) {
    detail::require_exponent(p);
    detail::require_open_radius(r);
    return detail::p_mean([&](double th) { return detail::magnitude(w(std::polar(r, th))); }, p, n_theta);
}

/// Largest circle mean over the radii: a lower bound of the Hardy norm.
template <class F>
double hardy_norm_estimate(const F& w, double p, const std::vector<double>& radii, int n_theta = 256) {
    detail::require_radii(radii);
    double s = 0.0;
    for (double r : radii) s = std::max(s, circle_mean(w, p, r, n_theta));
    return s;
}

template <class F>
RadialProfile radial_profile(const F& w, double p, const std::vector<double>& radii, int n_theta = 256) {
    detail::require_radii(radii);
    RadialProfile out{p, radii, {}, {}};
    for (double r : radii) out.means.push_back(circle_mean(w, p, r, n_theta));
    return out;
}

/// Circle means together with the L^p distance to the boundary values on each circle.
template <class F, class V>
RadialProfile boundary_gap_profile(const F& w, const BoundaryData<V>& w_nt, double p, const std::vector<double>& radii,
                                   int n_theta = 256) {
    RadialProfile out = radial_profile(w, p, radii, n_theta);
    const std::vector<V> trace = w_nt.sample(n_theta);
    for (double r : radii) {
        double acc = 0.0;
        for (int t = 0; t < n_theta; ++t) {
            const cplx z = std::polar(r, 2.0 * std::numbers::pi * t / n_theta);
            acc += std::pow(detail::magnitude(V(w(z)) - trace[t]), p);
        }
        out.gaps.push_back(std::pow(acc / n_theta, 1.0 / p));
    }
    return out;
}

struct ComparabilityRow {
    double r = 0.0;
    double mean_plus = 0.0;
    double mean_minus = 0.0;
    double mean = 0.0;
    double lower = 0.0;  // max(mean_plus, mean_minus) / sqrt 2
    double upper = 0.0;  // Minkowski bound on (|w+| + |w-|) / sqrt 2
    bool holds = false;
};

struct ComparabilityReport {
    double p = 2.0;
    std::vector<ComparabilityRow> rows;
    bool holds = true;
};

/**
 * @brief Integrated form of max(|w+|,|w-|)/sqrt 2 <= ||w||_B <= (|w+| + |w-|)/sqrt 2.
 *
 * For p >= 1 the upper side is (M+ + M-)/sqrt 2 by Minkowski; for p < 1 the
 * quasi-triangle constant 2^{1/p - 1} is included.
 */
template <class F>
ComparabilityReport idempotent_hardy_check(const F& w, double p, const std::vector<double>& radii, int n_theta = 256,
                                           double slack = 1e-12) {
    detail::require_exponent(p);
    detail::require_radii(radii);
    const double k = p >= 1.0 ? 1.0 : std::pow(2.0, 1.0 / p - 1.0);
    ComparabilityReport out;
    out.p = p;
    for (double r : radii) {
        ComparabilityRow row;
        row.r = r;
        auto at = [&](double th) { return Bicomplex(w(std::polar(r, th))); };
        row.mean_plus = detail::p_mean([&](double th) { return std::abs(at(th).plus()); }, p, n_theta);
        row.mean_minus = detail::p_mean([&](double th) { return std::abs(at(th).minus()); }, p, n_theta);
        row.mean = detail::p_mean([&](double th) { return bc_norm(at(th)); }, p, n_theta);
        row.lower = std::max(row.mean_plus, row.mean_minus) / std::numbers::sqrt2;
        row.upper = k * (row.mean_plus + row.mean_minus) / std::numbers::sqrt2;
        const double tol = slack * std::max(1.0, row.upper);
        row.holds = row.lower <= row.mean + tol && row.mean <= row.upper + tol;
        out.holds = out.holds && row.holds;
        out.rows.push_back(row);
    }
    return out;
}

/// (\iint ||w||^m dx dy)^{1/m}; a diagnostic, not a bound.
template <class F>
double disk_lm_norm(const F& w, double m, const DiskQuadrature& quad) {
    detail::require_exponent(m);
    const double s = quad.integrate([&](cplx z) { return std::pow(detail::magnitude(w(z)), m); });
    return std::pow(s, 1.0 / m);
}

}  // namespace bcdisk
