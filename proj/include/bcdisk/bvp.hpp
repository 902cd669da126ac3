#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fd.hpp"
#include "operators.hpp"

namespace bcdisk {

/// How the Neumann series for dw/dz* is generated.
enum class SeriesForm {
    neumann,  // t_{k+1} = mu T(t_k); T is only real-linear, so mu stays inside
    literal   // t_k = mu^k T^k(g); equal to neumann for real mu
};

struct SolveOptions {
    double tol = 1e-6;  // series truncation
    int series_cap = 40;
    double tol_pde = 1e-5;
    double tol_boundary = 1e-3;
    double fd_step = default_fd_step;
    int probes = 64;
    double probe_radius = 0.9;
    double boundary_radius = 0.99;
    int boundary_n_theta = 256;
    int contour_nodes = 4096;  // boundary integrals must stay resolved at r = 0.995
    SeriesForm form = SeriesForm::neumann;
};

inline constexpr double inf = std::numeric_limits<double>::infinity();

struct ComplexSolveReport {
    ComplexField solution;
    std::optional<ComplexPoly> exact;
    double pde_residual_max = inf;
    double boundary_error = inf;
    double boundary_gap_raw = inf;
    double constraint_error = inf;
    int series_terms_used = 0;
    bool converged = false;
    bool accepted = false;
    std::vector<double> term_sup;  // sup over probes of each series term's contribution to w
    std::vector<double> term_l2;   // disk L2 norm of each density term
    std::string message;
};

struct SolveReport {
    BicomplexField solution;  // empty when the solver refused to emit one
    std::optional<PolyField> exact;
    double pde_residual_max = inf;
    double boundary_error = inf;
    double boundary_gap_raw = inf;
    double constraint_error = inf;
    int series_terms_used = 0;
    bool converged = false;
    bool accepted = false;
    std::map<std::string, double> diagnostics;
    std::string message;

    std::string verdict() const { return accepted ? "accepted" : "rejected"; }
};

/// Deterministic probe set: a sunflower spiral filling |z| <= r_max.
inline std::vector<cplx> probe_points(int n, double r_max) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<cplx> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) out.push_back(std::polar(r_max * std::sqrt((k + 0.5) / n), k * golden));
    return out;
}

namespace detail {

/// L2 (angle-normalised) norm of e(theta) over n uniform angles.
template <class E>
double l2_angle(const E& e, int n) {
    double s = 0.0;
    for (int t = 0; t < n; ++t) s += e(2.0 * std::numbers::pi * t / n);
    return std::sqrt(s / n);
}

/**
 * Boundary gap at r1 and of the linear extrapolation to the circle from r1
 * and r2 = (1 + r1)/2.  defect(value, theta) returns the squared pointwise
 * defect against the prescribed data.
 */
template <class Value, class Defect>
std::pair<double, double> boundary_gaps(const Value& value, const Defect& defect, double r1, int n) {
    const double r2 = 0.5 * (1.0 + r1);
    const double raw = l2_angle([&](double th) { return defect(value(std::polar(r1, th)), th); }, n);
    const double ext = l2_angle(
        [&](double th) {
            const auto a = value(std::polar(r1, th));
            const auto b = value(std::polar(r2, th));
            return defect(b * 2.0 - a, th);
        },
        n);
    return {raw, ext};
}

}  // namespace detail

/**
 * @brief Schwarz problem dw/dz* = mu dw/dz + f, Re w = gamma on the circle,
 *        Im w(0) = a, for constant complex mu.
 *
 * w = phi + S(rho) where phi is the Schwarz integral of gamma and rho = dw/dz*
 * solves rho = g + mu T(rho), g = f + mu phi'.  All terms stay polynomial, so
 * S and T are applied exactly; the candidate is then checked with
 * finite-difference residuals.
 */
inline ComplexSolveReport solve_schwarz_complex(cplx mu, const ComplexPoly& f, const RealBoundary& gamma, double a,
                                                const SolveOptions& opt = {}) {
    require_elliptic(mu);
    const ComplexPoly phi = schwarz_closed_form(gamma, a);
    const ComplexPoly g = f + mu * d_var(phi);
    const std::vector<cplx> probes = probe_points(opt.probes, opt.probe_radius);

    ComplexSolveReport rep;
    ComplexPoly rho;
    ComplexPoly term = g;
    ComplexPoly iterate = g;  // T^k g for the literal form
    for (int k = 0; k < opt.series_cap; ++k) {
        rho += term;
        ++rep.series_terms_used;
        const ComplexPoly contrib = schwarz_area_exact(term);
        double s = 0.0;
        for (cplx z : probes) s = std::max(s, std::abs(contrib(z)));
        rep.term_sup.push_back(s);
        rep.term_l2.push_back(disk_l2_exact(term));
        if (mu == cplx{}) {
            rep.converged = true;
            break;
        }
        if (opt.form == SeriesForm::neumann) {
            term = mu * pi_operator_exact(term);
        } else {
            iterate = pi_operator_exact(iterate);
            term = std::pow(mu, k + 1) * iterate;
        }
        if (sup_bound(term) < opt.tol) {
            rep.converged = true;
            break;
        }
    }
    if (!rep.converged) rep.message = "series cap reached before the tolerance was met";

    ComplexPoly w = (phi + schwarz_area_exact(rho)).prune();
    rep.exact = w;
    rep.solution = [w](cplx z) { return w(z); };

    double res = 0.0;
    for (cplx z : probes) {
        const Wirtinger d = fd_wirtinger(w, z, opt.fd_step);
        res = std::max(res, std::abs(d.dzbar - mu * d.dz - f(z)));
    }
    rep.pde_residual_max = res;
    auto [raw, ext] = detail::boundary_gaps(
        [&](cplx z) { return w(z).real(); },
        [&](double v, double th) { return std::pow(v - gamma(th).real(), 2); }, opt.boundary_radius,
        opt.boundary_n_theta);
    rep.boundary_gap_raw = raw;
    rep.boundary_error = ext;
    rep.constraint_error = std::abs(w(0.0).imag() - a);
    rep.accepted = rep.converged && rep.pde_residual_max <= opt.tol_pde && rep.boundary_error <= opt.tol_boundary &&
                   rep.constraint_error <= opt.tol_boundary;
    if (rep.converged && !rep.accepted) rep.message = "residual gate rejected the candidate";
    return rep;
}

/// mu = 0 Schwarz problem by Poisson pairing plus the quadrature area operator.
template <class F>
ComplexSolveReport solve_schwarz_dbar(const F& f, const RealBoundary& g, double c, const DiskQuadrature& quad,
                                      const SolveOptions& opt = {}) {
    require_real(g);
    const std::vector<cplx> samples = g.sample(std::max(quad.n_theta(), opt.contour_nodes));
    const ComplexField area = schwarz_area_operator(f, quad);
    ComplexSolveReport rep;
    rep.solution = [samples, area, c](cplx z) { return poisson_pairing(samples, z) + cplx(0.0, c) + area(z); };
    rep.converged = true;
    double res = 0.0;
    for (cplx z : probe_points(opt.probes, opt.probe_radius)) {
        const Wirtinger d = fd_wirtinger(rep.solution, z, opt.fd_step);
        res = std::max(res, std::abs(d.dzbar - cplx(f(z))));
    }
    rep.pde_residual_max = res;
    auto [raw, ext] = detail::boundary_gaps(
        [&](cplx z) { return rep.solution(z).real(); },
        [&](double v, double th) { return std::pow(v - g(th).real(), 2); }, opt.boundary_radius,
        opt.boundary_n_theta);
    rep.boundary_gap_raw = raw;
    rep.boundary_error = ext;
    rep.constraint_error = std::abs(rep.solution(0.0).imag() - c);
    rep.accepted = rep.pde_residual_max <= opt.tol_pde && rep.boundary_error <= opt.tol_boundary &&
                   rep.constraint_error <= opt.tol_boundary;
    return rep;
}

struct SchwarzProblem {
    Bicomplex mu;
    PolyField f;
    RealBoundary gamma1;
    RealBoundary gamma2;
    double a1 = 0.0;
    double a2 = 0.0;
    double tol = 1e-6;
    int series_cap = 40;
};

/// The Schwarz data (and source) for which the polynomial field w is the solution.
inline SchwarzProblem schwarz_problem_for(const PolyField& w, const Bicomplex& mu) {
    SchwarzProblem p;
    p.mu = mu;
    p.f = beltrami_apply(w, mu).prune();
    p.gamma1 = real_part(circle_trace(plus_component(w)));
    p.gamma2 = real_part(circle_trace(minus_component(w)));
    const Bicomplex w0 = w(0.0);
    p.a1 = w0.plus().imag();
    p.a2 = w0.minus().imag();
    return p;
}

namespace detail {

template <class W, class F>
double bicomplex_residual(const W& w, const Bicomplex& mu, const F& f, const std::vector<cplx>& probes, double h) {
    double res = 0.0;
    for (cplx z : probes) {
        const BcWirtinger d = fd_bicomplex(w, z, h);
        res = std::max(res, bc_norm(d.delbar - mu * d.del - Bicomplex(f(z))));
    }
    return res;
}

}  // namespace detail

/**
 * @brief Bicomplex Schwarz problem delbar w = mu del w + f.
 *
 * conj(w+) solves the complex problem with conj(mu+), conj(f+), gamma1 and
 * constraint -a1; w- solves the one with mu-, f-, gamma2, a2.
 */
inline SolveReport solve_schwarz_bicomplex(const SchwarzProblem& p, SolveOptions opt = {}) {
    require_elliptic(p.mu);
    opt.tol = p.tol;
    opt.series_cap = p.series_cap;
    const ComplexSolveReport plus = solve_schwarz_complex(std::conj(p.mu.plus()), conj_field(plus_component(p.f)),
                                                          p.gamma1, -p.a1, opt);
    const ComplexSolveReport minus = solve_schwarz_complex(p.mu.minus(), minus_component(p.f), p.gamma2, p.a2, opt);

    SolveReport rep;
    const PolyField w = from_components(conj_field(*plus.exact), *minus.exact).prune();
    rep.exact = w;
    rep.solution = [w](cplx z) { return w(z); };
    rep.series_terms_used = std::max(plus.series_terms_used, minus.series_terms_used);
    rep.converged = plus.converged && minus.converged;

    const auto probes = probe_points(opt.probes, opt.probe_radius);
    rep.pde_residual_max = detail::bicomplex_residual(w, p.mu, p.f, probes, opt.fd_step);
    rep.boundary_gap_raw = std::max(plus.boundary_gap_raw, minus.boundary_gap_raw);
    rep.boundary_error = std::max(plus.boundary_error, minus.boundary_error);
    const Bicomplex w0 = w(0.0);
    rep.constraint_error = std::max(std::abs(w0.plus().imag() - p.a1), std::abs(w0.minus().imag() - p.a2));
    rep.diagnostics["plus_terms"] = plus.series_terms_used;
    rep.diagnostics["minus_terms"] = minus.series_terms_used;
    rep.diagnostics["plus_residual"] = plus.pde_residual_max;
    rep.diagnostics["minus_residual"] = minus.pde_residual_max;
    rep.accepted = rep.converged && rep.pde_residual_max <= opt.tol_pde && rep.boundary_error <= opt.tol_boundary &&
                   rep.constraint_error <= opt.tol_boundary;
    if (!rep.converged) rep.message = "series cap reached before the tolerance was met";
    else if (!rep.accepted) rep.message = "residual gate rejected the candidate";
    return rep;
}

// ---------------------------------------------------------------------------
// Dirichlet problem

/// Which form of the solvability identity and solution formula to use.
enum class DirichletForm {
    corrected,  // Green-identity form for the kernel 1/(xi(zeta) - xi(z)), xi = zeta + c conj(zeta)
    literal     // Cauchy kernel plus the shifted kernel, kept for comparison
};

struct DirichletCheck {
    std::vector<cplx> probes;
    std::vector<double> gaps;
    double max_gap = 0.0;
    int series_terms = 0;
    bool solvable = false;
};

namespace detail {

inline int geometric_terms(double c, double tol, int cap) {
    if (c == 0.0) return 1;
    const int k = static_cast<int>(std::ceil(std::log(tol) / std::log(c)));
    return std::clamp(k + 1, 1, cap);
}

/// True when the reflected kernel of the solvability identity is regular on the closed disk.
inline bool probe_is_valid(cplx mu, cplx z) {
    const cplx zs = std::conj(z);
    const cplx t = (1.0 + mu * zs * zs) / zs;
    const cplx pre = (t - mu * std::conj(t)) / (1.0 - std::norm(mu));
    return std::abs(pre) > 1.0 + 1e-9;
}

}  // namespace detail

/**
 * @brief Contour-versus-area solvability identity for dw/dz* = mu dw/dz + f, w = gamma on the circle.
 *
 * Right side: sum_k mu^k (1/pi) \iint f (conj(zeta - z))^k conj(z)^{k+1} / (1 - conj(z) zeta)^{k+1} dA.
 * Left side (corrected form): (1/2 pi i) \oint gamma conj(z) (1 - mu conj(zeta)^2) / (1 + mu conj(z)^2
 * - conj(z)(zeta + mu conj(zeta))) dzeta, which is what Green's identity gives for the summed kernel.
 */
inline DirichletCheck dirichlet_check_complex(cplx mu, const ComplexPoly& f, const ComplexBoundary& gamma,
                                              const std::vector<cplx>& probes, double tol, const DiskQuadrature& quad,
                                              DirichletForm form = DirichletForm::corrected, int cap = 40) {
    require_elliptic(mu);
    const int n = quad.n_theta();
    const std::vector<cplx> gs = gamma.sample(n);
    DirichletCheck out;
    out.probes = probes;
    out.series_terms = detail::geometric_terms(std::abs(mu), tol, cap);
    for (cplx z : probes) {
        if (!(std::abs(z) < 1.0)) throw std::domain_error("solvability probe must lie in the open disk");
        if (form == DirichletForm::corrected && !detail::probe_is_valid(mu, z))
            throw std::domain_error("probe outside the validity region of the solvability identity");
        const cplx zs = std::conj(z);
        cplx lhs{};
        for (int t = 0; t < n; ++t) {
            const cplx zeta = std::polar(1.0, 2.0 * std::numbers::pi * t / n);
            const cplx zc = std::conj(zeta);
            cplx k;
            if (form == DirichletForm::corrected)
                k = zs * (1.0 - mu * zc * zc) / (1.0 + mu * zs * zs - zs * (zeta + mu * zc));
            else
                k = (2.0 - mu * zs * zc) / (1.0 - mu * zs * zc) * zs / (1.0 - zs * zeta);
            lhs += gs[t] * zeta * k;
        }
        lhs /= static_cast<double>(n);
        cplx rhs{};
        if (!f.empty()) {
            rhs = quad.integrate([&](cplx zeta) {
                const cplx base = zs / (1.0 - zs * zeta);
                const cplx step = mu * std::conj(zeta - z) * base;
                cplx s{}, pk = base;
                for (int k = 0; k < out.series_terms; ++k) {
                    s += pk;
                    pk *= step;
                }
                return f(zeta) * s;
            }) / std::numbers::pi;
        }
        out.gaps.push_back(std::abs(lhs - rhs));
    }
    out.max_gap = out.gaps.empty() ? 0.0 : *std::max_element(out.gaps.begin(), out.gaps.end());
    out.solvable = out.max_gap <= tol;
    return out;
}

/**
 * @brief Candidate Dirichlet solution for a single complex component.
 *
 * corrected: (1/2 pi i) \oint gamma (dzeta + c d conj zeta) / Delta - (1/pi) \iint f / Delta dA,
 * literal: (1/2 pi i) \oint gamma [1/(zeta - z) + 1/Delta] dzeta - (1/pi) \iint f / Delta dA,
 * with Delta = (zeta - z) + c conj(zeta - z).
 */
inline ComplexField dirichlet_candidate(const ComplexPoly& f, const ComplexBoundary& gamma, cplx c,
                                        const DiskQuadrature& quad, DirichletForm form = DirichletForm::corrected,
                                        int contour_nodes = 4096) {
    if (!(std::abs(c) < 1.0)) throw std::domain_error("kernel constant must satisfy |c| < 1");
    const int n = std::max(quad.n_theta(), contour_nodes);
    std::vector<cplx> gs = gamma.sample(n);
    return [gs = std::move(gs), f, c, quad, form, n](cplx z) {
        if (!(std::abs(z) < 1.0)) throw std::domain_error("Dirichlet solution evaluated off the open disk");
        cplx s{};
        for (int t = 0; t < n; ++t) {
            const cplx zeta = std::polar(1.0, 2.0 * std::numbers::pi * t / n);
            const cplx zc = std::conj(zeta);
            const cplx delta = (zeta - z) + c * std::conj(zeta - z);
            const cplx k = form == DirichletForm::corrected ? (1.0 - c * zc * zc) / delta
                                                            : 1.0 / (zeta - z) + 1.0 / delta;
            s += gs[t] * zeta * k;
        }
        s /= static_cast<double>(n);
        if (!f.empty()) {
            s -= quad.integrate_centered(z, [&](cplx zeta, double, cplx u) { return f(zeta) / (u + c * std::conj(u)); }) /
                 std::numbers::pi;
        }
        return s;
    };
}

struct DirichletProblem {
    Bicomplex mu;
    PolyField f;
    BicomplexBoundary gamma;
    std::optional<cplx> kernel_plus;   // defaults to conj(mu+), the plus problem's coefficient
    std::optional<cplx> kernel_minus;  // defaults to mu-
    double tol = 1e-6;
    DirichletForm form = DirichletForm::corrected;
};

struct DirichletReport {
    DirichletCheck plus;
    DirichletCheck minus;
    std::vector<double> gaps;  // bicomplex norm of the per-probe component gaps
    double max_gap = 0.0;
    bool solvable = false;
};

namespace detail {

inline ComplexBoundary plus_trace_conj(const BicomplexBoundary& g) {
    std::map<int, cplx> m;
    for (const auto& [k, c] : g.coefficients()) m[-k] += std::conj(c.plus());
    return ComplexBoundary::from_fourier(m);
}

inline ComplexBoundary minus_trace(const BicomplexBoundary& g) {
    std::map<int, cplx> m;
    for (const auto& [k, c] : g.coefficients()) m[k] += c.minus();
    return ComplexBoundary::from_fourier(m);
}

}  // namespace detail

inline DirichletReport dirichlet_solvability_check(const DirichletProblem& p, const std::vector<cplx>& probes,
                                                   const DiskQuadrature& quad) {
    require_elliptic(p.mu);
    DirichletReport r;
    r.plus = dirichlet_check_complex(std::conj(p.mu.plus()), conj_field(plus_component(p.f)),
                                     detail::plus_trace_conj(p.gamma), probes, p.tol, quad, p.form);
    r.minus = dirichlet_check_complex(p.mu.minus(), minus_component(p.f), detail::minus_trace(p.gamma), probes, p.tol,
                                      quad, p.form);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double g = std::sqrt(0.5 * (std::pow(r.plus.gaps[i], 2) + std::pow(r.minus.gaps[i], 2)));
        r.gaps.push_back(g);
        r.max_gap = std::max(r.max_gap, g);
    }
    r.solvable = r.max_gap <= p.tol;
    return r;
}

/// Default solvability probes: 20 points on radii 0.2..0.5, away from the origin.
inline std::vector<cplx> dirichlet_probes() {
    std::vector<cplx> out;
    for (int k = 0; k < 20; ++k) out.push_back(std::polar(0.2 + 0.3 * (k % 4) / 3.0, 2.0 * std::numbers::pi * k / 20.0 + 0.1));
    return out;
}

inline SolveReport solve_dirichlet_bicomplex(const DirichletProblem& p, const DiskQuadrature& quad,
                                             const SolveOptions& opt = {},
                                             const std::vector<cplx>& probes = dirichlet_probes()) {
    const DirichletReport check = dirichlet_solvability_check(p, probes, quad);
    SolveReport rep;
    rep.diagnostics["solvability_gap"] = check.max_gap;
    rep.diagnostics["solvability_terms"] = std::max(check.plus.series_terms, check.minus.series_terms);
    rep.series_terms_used = std::max(check.plus.series_terms, check.minus.series_terms);
    if (!check.solvable) {
        rep.message = "solvability check failed; no solution emitted";
        return rep;
    }
    const cplx cp = p.kernel_plus.value_or(std::conj(p.mu.plus()));
    const cplx cm = p.kernel_minus.value_or(p.mu.minus());
    const ComplexField wp = dirichlet_candidate(conj_field(plus_component(p.f)), detail::plus_trace_conj(p.gamma), cp,
                                                quad, p.form, opt.contour_nodes);
    const ComplexField wm =
        dirichlet_candidate(minus_component(p.f), detail::minus_trace(p.gamma), cm, quad, p.form, opt.contour_nodes);
    rep.solution = [wp, wm](cplx z) { return Bicomplex::idem(std::conj(wp(z)), wm(z)); };
    rep.converged = true;

    const auto pts = probe_points(opt.probes, opt.probe_radius);
    rep.pde_residual_max = detail::bicomplex_residual(rep.solution, p.mu, p.f, pts, opt.fd_step);
    auto [raw, ext] = detail::boundary_gaps(
        rep.solution, [&](const Bicomplex& v, double th) { return std::pow(bc_norm(v - p.gamma(th)), 2); },
        opt.boundary_radius, opt.boundary_n_theta);
    rep.boundary_gap_raw = raw;
    rep.boundary_error = ext;
    rep.constraint_error = 0.0;
    rep.accepted = rep.pde_residual_max <= opt.tol_pde && rep.boundary_error <= opt.tol_boundary;
    if (!rep.accepted) rep.message = "residual gate rejected the candidate";
    return rep;
}

}  // namespace bcdisk
