#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bicomplex.hpp"

namespace bcdisk {

/// Gauss-Legendre nodes and weights mapped to (0,1).
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

inline GaussRule gauss_legendre01(int n) {
    if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
    GaussRule g{std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        g.x[i] = 0.5 * (1.0 - x);
        g.w[i] = 0.5 * w;
        g.x[n - 1 - i] = 0.5 * (1.0 + x);
        g.w[n - 1 - i] = 0.5 * w;
    }
    return g;
}

/**
 * @brief Tensor-product quadrature over the unit disk.
 *
 * integrate() uses Gauss-Legendre radii with Jacobian r and uniform angles
 * about the origin.  integrate_centered() uses the same orders in polar
 * coordinates about an interior point z, so a 1/|zeta - z| singularity is
 * cancelled by the Jacobian; rho_min > 0 excludes a disk of that radius.
 */
class DiskQuadrature {
public:
    DiskQuadrature(int n_r = 128, int n_theta = 512, double eps_factor = 0.01)
        : n_r_(n_r), n_theta_(n_theta), rule_(gauss_legendre01(n_r)) {
        if (n_theta < 4) throw std::invalid_argument("n_theta must be at least 4");
        if (eps_factor < 0.0) throw std::invalid_argument("epsilon factor must be non-negative");
        epsilon_ = eps_factor * std::max(1.0 / n_r, 2.0 * std::numbers::pi / n_theta);
    }

    int n_r() const { return n_r_; }
    int n_theta() const { return n_theta_; }
    double epsilon() const { return epsilon_; }
    const GaussRule& radial() const { return rule_; }

    /// Integral of f(zeta) over the disk.
    template <class F>
    auto integrate(const F& f) const {
        using V = decltype(f(cplx{}));
        V s{};
        const double dt = 2.0 * std::numbers::pi / n_theta_;
        for (int t = 0; t < n_theta_; ++t) {
            const cplx u = std::polar(1.0, t * dt);
            V ring{};
            for (int i = 0; i < n_r_; ++i) {
                const double r = rule_.x[i];
                ring += f(r * u) * (rule_.w[i] * r);
            }
            s += ring * dt;
        }
        return s;
    }

    /// Distance from z to the unit circle along direction u.
    static double reach(cplx z, cplx u) {
        const double b = (std::conj(z) * u).real();
        const double c = 1.0 - std::norm(z);
        const double s = std::sqrt(b * b + c);
        return b >= 0.0 ? c / (b + s) : s - b;
    }

    /// Integral over {rho > rho_min} of g(zeta, rho, u) d rho d phi, zeta = z + rho u.
    /// The caller supplies the integrand already multiplied by the Jacobian rho.
    template <class G>
    auto integrate_centered(cplx z, const G& g, double rho_min = 0.0) const {
        if (!(std::abs(z) < 1.0)) throw std::domain_error("evaluation point must lie in the open disk");
        using V = decltype(g(cplx{}, 0.0, cplx{}));
        V s{};
        const double dt = 2.0 * std::numbers::pi / n_theta_;
        for (int t = 0; t < n_theta_; ++t) {
            const cplx u = std::polar(1.0, t * dt);
            const double len = reach(z, u) - rho_min;
            if (len <= 0.0) continue;
            V ray{};
            for (int i = 0; i < n_r_; ++i) {
                const double rho = rho_min + len * rule_.x[i];
                ray += g(z + rho * u, rho, u) * (rule_.w[i] * len);
            }
            s += ray * dt;
        }
        return s;
    }

    /// Integral of h(phi) over [0, 2 pi) with the rule's angles.
    template <class H>
    auto angular(const H& h) const {
        using V = decltype(h(0.0));
        V s{};
        const double dt = 2.0 * std::numbers::pi / n_theta_;
        for (int t = 0; t < n_theta_; ++t) s += h(t * dt) * dt;
        return s;
    }

private:
    int n_r_;
    int n_theta_;
    double epsilon_ = 0.0;
    GaussRule rule_;
};

}  // namespace bcdisk
