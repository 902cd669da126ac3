#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "boundary.hpp"
#include "poly.hpp"
#include "quadrature.hpp"

namespace bcdisk {

using ComplexField = std::function<cplx(cplx)>;
using BicomplexField = std::function<Bicomplex(cplx)>;

inline void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("kernel radius must lie in [0,1)");
}

inline double poisson_kernel(double r, double theta) {
    require_radius(r);
    return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

inline double conj_poisson_kernel(double r, double theta) {
    require_radius(r);
    return 2.0 * r * std::sin(theta) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

inline void require_real(const RealBoundary& g) {
    if (!is_real_valued(g, 1e-10)) throw std::invalid_argument("Schwarz data must be real valued");
}

/// Fourier coefficients of a complex polynomial restricted to the circle.
inline std::map<int, cplx> circle_trace(const ComplexPoly& p) {
    std::map<int, cplx> m;
    for (const auto& [k, c] : p.terms()) m[k.first - k.second] += c;
    return m;
}

/// Boundary trace of a bicomplex polynomial: the plus part of v^m (v*)^n is e^{i(n-m) theta}.
inline BicomplexBoundary circle_trace(const PolyField& f) {
    std::map<int, Bicomplex> m;
    for (const auto& [k, c] : f.terms()) {
        m[k.second - k.first] += Bicomplex::idem(c.plus(), 0.0);
        m[k.first - k.second] += Bicomplex::idem(0.0, c.minus());
    }
    return BicomplexBoundary::from_fourier(m);
}

/// Closed form g0 + 2 sum_{k>=1} g_k z^k + i a of the Schwarz integral.
inline ComplexPoly schwarz_closed_form(const RealBoundary& g, double a) {
    require_real(g);
    ComplexPoly phi = ComplexPoly::constant(cplx(0.0, a));
    for (const auto& [k, c] : g.coefficients()) {
        if (k == 0) phi.add(0, 0, c.real());
        else if (k > 0) phi.add(k, 0, 2.0 * c);
    }
    return phi.prune();
}

/// Trapezoid evaluation of (1/2 pi i) \oint g (zeta + z)/(zeta - z) dzeta/zeta + i a.
inline ComplexField schwarz_integral(const RealBoundary& g, double a, int n_theta = 512) {
    require_real(g);
    std::vector<cplx> v = g.sample(n_theta);
    return [v = std::move(v), a](cplx z) {
        if (!(std::abs(z) < 1.0)) throw std::domain_error("Schwarz integral evaluated off the open disk");
        const int n = static_cast<int>(v.size());
        cplx s{};
        for (int t = 0; t < n; ++t) {
            const cplx zeta = std::polar(1.0, 2.0 * std::numbers::pi * t / n);
            s += v[t].real() * (zeta + z) / (zeta - z);
        }
        return s / static_cast<double>(n) + cplx(0.0, a);
    };
}

/// Poisson/conjugate-Poisson pairing (1/2 pi) \int g(t) (P_r + i Q_r)(theta - t) dt.
inline cplx poisson_pairing(const std::vector<cplx>& samples, cplx z) {
    const int n = static_cast<int>(samples.size());
    const double r = std::abs(z), theta = std::arg(z);
    cplx s{};
    for (int t = 0; t < n; ++t) {
        const double d = theta - 2.0 * std::numbers::pi * t / n;
        s += samples[t].real() * cplx(poisson_kernel(r, d), conj_poisson_kernel(r, d));
    }
    return s / static_cast<double>(n);
}

/**
 * @brief Exact area operator on polynomial data.
 *
 * Returns the unique w with dw/dz* = h, Re w = 0 on the circle and
 * Im w(0) = 0, i.e. the area term of the Schwarz solution for the inhomogeneous
 * Cauchy-Riemann equation.  The particular solution z^a z*^{b+1}/(b+1) is
 * corrected by the Schwarz integral of its real boundary trace.
 */
inline ComplexPoly schwarz_area_exact(const ComplexPoly& h) {
    ComplexPoly p;
    std::map<int, cplx> trace;
    for (const auto& [k, c] : h.terms()) {
        const cplx q = c / static_cast<double>(k.second + 1);
        p.add(k.first, k.second + 1, q);
        trace[k.first - k.second - 1] += q;
    }
    return (p - schwarz_closed_form(real_part(trace), 0.0)).prune();
}

/// Exact pi operator: the z-derivative of schwarz_area_exact.
inline ComplexPoly pi_operator_exact(const ComplexPoly& g) { return d_var(schwarz_area_exact(g)).prune(); }

/**
 * @brief Quadrature evaluation of
 *        -(1/2 pi) \iint [f/zeta (zeta+z)/(zeta-z) + conj(f/zeta) (1+z conj zeta)/(1-z conj zeta)] dA.
 *
 * The kernels are split as 2/(zeta-z) - 1/zeta and 1/conj(zeta) + 2z/(1 - z conj zeta).
 * The two origin-singular pieces do not depend on z and are integrated once on
 * the origin-centred rule; the rest uses the rule centred at z.
 */
template <class F>
ComplexField schwarz_area_operator(const F& f, const DiskQuadrature& quad) {
    const cplx m = quad.integrate([&](cplx zeta) { return cplx(f(zeta)) / zeta; });
    const cplx origin_part = -m + std::conj(m);
    return [f, quad, origin_part](cplx z) {
        const cplx near = quad.integrate_centered(z, [&](cplx zeta, double rho, cplx u) {
            const cplx fz = f(zeta);
            return 2.0 * fz * std::conj(u) + 2.0 * z * std::conj(fz) * rho / (1.0 - z * std::conj(zeta));
        });
        return -(near + origin_part) / (2.0 * std::numbers::pi);
    };
}

struct PvEstimate {
    cplx value;
    double refinement_gap;  // |T_eps - T_{eps/2}|
};

/**
 * @brief Principal value of -(1/pi) \iint [g/(zeta-z)^2 + conj(g)/(1 - z conj zeta)^2] dA at z.
 *
 * g(z) is subtracted inside the strongly singular part; the constant part's
 * principal value is the angular integral of e^{-2i phi} ln R(phi).  The rest
 * is integrated outside a disk of radius eps about z, and eps/2 is used as a
 * self-convergence check.
 */
template <class F>
PvEstimate pi_operator_at(const F& g, cplx z, const DiskQuadrature& quad) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("pi operator evaluated off the open disk");
    const cplx gz = g(z);
    auto singular = [&](double eps) {
        return quad.integrate_centered(
            z, [&](cplx zeta, double rho, cplx u) { return (cplx(g(zeta)) - gz) * std::conj(u * u) / rho; }, eps);
    };
    const cplx log_part = quad.angular([&](double phi) {
        const cplx u = std::polar(1.0, phi);
        return std::conj(u * u) * std::log(DiskQuadrature::reach(z, u));
    });
    const cplx regular = quad.integrate_centered(z, [&](cplx zeta, double rho, cplx) {
        const cplx d = 1.0 - z * std::conj(zeta);
        return std::conj(cplx(g(zeta))) * rho / (d * d);
    });
    const double eps = quad.epsilon();
    const cplx a = singular(eps), b = singular(0.5 * eps);
    const cplx tail = gz * log_part + regular;
    return {-(b + tail) / std::numbers::pi, std::abs(a - b) / std::numbers::pi};
}

template <class F>
ComplexField pi_operator(const F& g, const DiskQuadrature& quad) {
    return [g, quad](cplx z) { return pi_operator_at(g, z, quad).value; };
}

/// Exact T_B on polynomial data: p+ conj(S(conj f+)) + p- S(f-).
inline PolyField t_bicomplex_exact(const PolyField& f) {
    const ComplexPoly plus = conj_field(schwarz_area_exact(conj_field(plus_component(f))));
    return from_components(plus, schwarz_area_exact(minus_component(f)));
}

/// Quadrature T_B(f) = p+ T*(f+) + p- T(f-), with T*(h) = conj(T(conj h)).
template <class F>
BicomplexField t_bicomplex(const F& f, const DiskQuadrature& quad) {
    const ComplexField plus = schwarz_area_operator([f](cplx z) { return std::conj(Bicomplex(f(z)).plus()); }, quad);
    const ComplexField minus = schwarz_area_operator([f](cplx z) { return Bicomplex(f(z)).minus(); }, quad);
    return [plus, minus](cplx z) { return Bicomplex::idem(std::conj(plus(z)), minus(z)); };
}

}  // namespace bcdisk
