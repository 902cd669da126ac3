#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "bvp.hpp"
#include "config.hpp"
#include "fd.hpp"
#include "hardy.hpp"
#include "hoib.hpp"
#include "transforms.hpp"

namespace bcdisk {

enum class Compare { at_most, at_least, info };

struct Metric {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    Compare cmp = Compare::at_most;

    bool pass() const {
        if (cmp == Compare::info) return true;
        if (std::isnan(value)) return false;
        return cmp == Compare::at_most ? value <= bound : value >= bound;
    }
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::vector<Metric> metrics;
    double runtime_s = 0.0;
    double limit_s = 0.0;  // zero: no limit
    std::string note;

    bool within_time() const { return limit_s <= 0.0 || runtime_s <= limit_s; }
    bool pass() const {
        return within_time() && std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.pass(); });
    }
};

struct SuiteResult {
    std::uint64_t seed = 0;
    std::map<std::string, std::string> config;
    std::vector<CriterionResult> criteria;

    bool pass() const {
        return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass(); });
    }
};

namespace detail {

inline nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

inline const char* compare_name(Compare c) {
    switch (c) {
    case Compare::at_most: return "<=";
    case Compare::at_least: return ">=";
    default: return "info";
    }
}

inline std::mt19937_64 criterion_rng(const RunConfig& cfg, int id) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return std::mt19937_64(seq);
}

inline Bicomplex random_bicomplex(std::mt19937_64& rng, double a = 1.0) {
    std::uniform_real_distribution<double> u(-a, a);
    const double w = u(rng), x = u(rng), y = u(rng), z = u(rng);
    return Bicomplex(cplx(w, x), cplx(y, z));
}

inline cplx random_point(std::mt19937_64& rng, double r_max) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = r_max * std::sqrt(u(rng));
    return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

inline PolyField random_polyfield(std::mt19937_64& rng, int degree) {
    PolyField f;
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; m + n <= degree; ++n) f.add(m, n, random_bicomplex(rng));
    return f;
}

inline ComplexPoly random_complex_poly(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexPoly f;
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; m + n <= degree; ++n) {
            const double a = u(rng), b = u(rng);
            f.add(m, n, cplx(a, b));
        }
    return f;
}

/// Random mu with |mu+|, |mu-| <= a, hence ||mu||_B <= a.
inline Bicomplex random_mu(std::mt19937_64& rng, double a) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r1 = a * u(rng), t1 = 2.0 * std::numbers::pi * u(rng);
    const double r2 = a * u(rng), t2 = 2.0 * std::numbers::pi * u(rng);
    return Bicomplex::idem(std::polar(r1, t1), std::polar(r2, t2));
}

template <class F>
double sup_over(const std::vector<cplx>& pts, const F& err) {
    double s = 0.0;
    for (cplx z : pts) s = std::max(s, err(z));
    return s;
}

}  // namespace detail

inline nlohmann::json summary_json(const SuiteResult& r) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["config"] = r.config;
    nlohmann::json arr = nlohmann::json::array();
    std::vector<const CriterionResult*> sorted;
    for (const auto& c : r.criteria) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* c : sorted) {
        nlohmann::json m = nlohmann::json::array();
        for (const auto& x : c->metrics) {
            nlohmann::json e{{"name", x.name}, {"value", detail::number(x.value)}, {"compare", detail::compare_name(x.cmp)},
                             {"pass", x.pass()}};
            if (x.cmp != Compare::info) e["bound"] = detail::number(x.bound);
            m.push_back(e);
        }
        arr.push_back({{"id", c->id}, {"name", c->name}, {"pass", c->pass()}, {"metrics", m}, {"note", c->note}});
    }
    j["criteria"] = arr;
    j["pass"] = r.pass();
    return j;
}

// ---------------------------------------------------------------------------
// Criteria

/// Errors are relative to the product of the operand norms, the natural scale when zero divisors exist.
inline CriterionResult criterion_algebra(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 1;
    out.name = "algebra suite";
    auto rng = detail::criterion_rng(cfg, 1);
    double assoc = 0.0, comm = 0.0, dist = 0.0, cart = 0.0;
    int norm_viol = 0, sub_viol = 0, roundtrip = 0;
    for (int i = 0; i < 10000; ++i) {
        const Bicomplex a = detail::random_bicomplex(rng), b = detail::random_bicomplex(rng),
                        c = detail::random_bicomplex(rng);
        const double na = bc_norm(a), nb = bc_norm(b), nc = bc_norm(c);
        assoc = std::max(assoc, bc_norm(mul(mul(a, b), c) - mul(a, mul(b, c))) / (na * nb * nc));
        comm = std::max(comm, bc_norm(mul(a, b) - mul(b, a)) / (na * nb));
        dist = std::max(dist, bc_norm(mul(a, b + c) - (mul(a, b) + mul(a, c))) / (na * (nb + nc)));
        cart = std::max(cart, bc_norm(mul_cartesian(a, b) - mul(a, b)) / (na * nb));
        for (const Bicomplex& w : {a, b, c}) {
            const double p = std::abs(w.plus()), m = std::abs(w.minus()), n = bc_norm(w);
            if (!(std::max(p, m) / std::numbers::sqrt2 <= n && n <= (p + m) / std::numbers::sqrt2)) ++norm_viol;
            if (!(from_idempotent(to_idempotent(w)) == w)) ++roundtrip;
        }
        if (!(bc_norm(mul(a, b)) <= std::numbers::sqrt2 * na * nb)) ++sub_viol;
    }
    const Bicomplex pp = Bicomplex::p_plus(), pm = Bicomplex::p_minus();
    const bool exact = pp * pp == pp && pm * pm == pm && pp + pm == Bicomplex(1.0) && pp * pm == Bicomplex(0.0);
    const double tol = std::min(1e-14, cfg.tol_algebra);
    out.metrics = {{"associativity_rel", assoc, tol},
                   {"commutativity_rel", comm, tol},
                   {"distributivity_rel", dist, tol},
                   {"cartesian_vs_idempotent_rel", cart, tol},
                   {"idempotent_identities_exact", exact ? 1.0 : 0.0, 1.0, Compare::at_least},
                   {"idempotent_roundtrip_mismatches", double(roundtrip), 0.0},
                   {"norm_bound_violations", double(norm_viol), 0.0},
                   {"submultiplicativity_violations", double(sub_viol), 0.0}};
    out.limit_s = 5.0;
    return out;
}

inline CriterionResult criterion_operators(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 2;
    out.name = "operator consistency";
    auto rng = detail::criterion_rng(cfg, 2);
    double bc = 0.0, cx = 0.0, formal = 0.0;
    for (int f = 0; f < 10; ++f) {
        const PolyField p = detail::random_polyfield(rng, 6);
        const PolyField d = bc_del(p), db = bc_delbar(p);
        const ComplexPoly q = detail::random_complex_poly(rng, 6);
        const ComplexPoly qz = d_z(q), qs = d_zstar(q);
        formal = std::max({formal, (d - d_z(p)).max_coeff(), (db - d_zstar(p)).max_coeff()});
        for (int k = 0; k < 100; ++k) {
            const cplx z = detail::random_point(rng, 0.9);
            const BcWirtinger e = fd_bicomplex(p, z);
            bc = std::max({bc, bc_norm(e.del - d(z)), bc_norm(e.delbar - db(z))});
            const Wirtinger w = fd_wirtinger(q, z);
            cx = std::max({cx, std::abs(w.dz - qz(z)), std::abs(w.dzbar - qs(z))});
        }
    }
    out.metrics = {{"bicomplex_exact_vs_fd", bc, 1e-6},
                   {"complex_exact_vs_fd", cx, 1e-6},
                   {"idempotent_vs_formal_coeff", formal, 1e-12}};
    out.limit_s = 5.0;
    return out;
}

inline CriterionResult criterion_schwarz_mu0(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 3;
    out.name = "Schwarz mu=0 oracle";
    const DiskQuadrature quad(cfg.n_r, cfg.n_theta, cfg.eps_factor);
    SolveOptions opt;
    opt.tol_pde = cfg.tol_pde;
    opt.tol_boundary = cfg.tol_boundary;
    opt.series_cap = cfg.series_cap;
    const auto pts = probe_points(200, 0.9);
    const ComplexSolveReport series = solve_schwarz_complex(0.0, {}, cos_mode(1), 0.0, opt);
    const ComplexSolveReport dbar = solve_schwarz_dbar([](cplx) { return cplx{}; }, cos_mode(1), 0.0, quad, opt);
    const ComplexPoly one = ComplexPoly::constant(1.0);
    const RealBoundary zero = RealBoundary::from_fourier({});
    const ComplexSolveReport series_f = solve_schwarz_complex(0.0, one, zero, 0.0, opt);
    const ComplexSolveReport dbar_f = solve_schwarz_dbar([](cplx) { return cplx(1.0); }, zero, 0.0, quad, opt);
    auto diff = [&](const ComplexField& a, const ComplexField& b) {
        return detail::sup_over(pts, [&](cplx z) { return std::abs(a(z) - b(z)); });
    };
    const ComplexField id = [](cplx z) { return z; };
    out.metrics = {{"series_path_error", diff(series.solution, id), 1e-6},
                   {"dbar_path_error", diff(dbar.solution, id), 1e-6},
                   {"path_agreement", diff(series.solution, dbar.solution), 1e-6},
                   {"source_path_agreement", diff(series_f.solution, dbar_f.solution), 1e-6},
                   {"series_path_pde_residual", series.pde_residual_max, std::min(1e-8, cfg.tol_pde)},
                   {"source_dbar_pde_residual", dbar_f.pde_residual_max, std::min(1e-3, cfg.tol_pde)}};
    out.limit_s = 30.0;
    return out;
}

inline CriterionResult criterion_manufactured_schwarz(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 4;
    out.name = "manufactured Beltrami Schwarz";
    const Bicomplex mu = Bicomplex::idem(std::polar(0.3, 0.7), std::polar(0.3, -1.9));
    const PolyField exact = PolyField::var() + PolyField::conj_var() * mu;
    SchwarzProblem p = schwarz_problem_for(exact, mu);
    p.tol = 1e-10;
    p.series_cap = cfg.series_cap;
    SolveOptions opt;
    opt.tol_pde = cfg.tol_pde;
    opt.tol_boundary = cfg.tol_boundary;
    const SolveReport r = solve_schwarz_bicomplex(p, opt);
    const double err =
        detail::sup_over(probe_points(200, 0.9), [&](cplx z) { return bc_norm(r.solution(z) - exact(z)); });
    out.metrics = {{"mu_norm", bc_norm(mu), 0.3, Compare::info},
                   {"sup_error", err, 1e-4},
                   {"pde_residual_max", r.pde_residual_max, std::min(1e-4, cfg.tol_pde)},
                   {"boundary_error", r.boundary_error, std::min(1e-3, cfg.tol_boundary)},
                   {"boundary_gap_raw_r099", r.boundary_gap_raw, 0.0, Compare::info},
                   {"constraint_error", r.constraint_error, 1e-10}};
    out.note = "boundary_error extrapolates the r=0.99 and r=0.995 circles to the boundary";
    out.limit_s = 120.0;
    return out;
}

namespace detail {

/// Ratios of consecutive entries while the entries stay above the rounding floor.
inline std::vector<double> term_ratios(const std::vector<double>& v) {
    std::vector<double> r;
    if (v.empty() || v.front() == 0.0) return r;
    const double floor = 1e-10 * v.front();
    for (std::size_t k = 0; k + 1 < v.size() && v[k + 1] > floor; ++k) r.push_back(v[k + 1] / v[k]);
    return r;
}

}  // namespace detail

/**
 * Single-mode data (w = z + mu z*) makes every partial-sum difference an exact
 * multiple of the previous one.  For multi-mode data T is an L2 isometry, so the
 * density terms shrink by exactly c in L2 while probe sups only do so on average.
 */
inline CriterionResult criterion_series_decay(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 5;
    out.name = "series decay";
    for (double c : {0.3, 0.6}) {
        const cplx mu = std::polar(c, 0.9);
        const std::string tag = c == 0.3 ? "c03_" : "c06_";
        SolveOptions opt;
        opt.tol = 1e-14;
        opt.series_cap = std::max(cfg.series_cap, 60);

        ComplexPoly simple = ComplexPoly::var() + ComplexPoly::conj_var() * mu;
        const ComplexSolveReport a = solve_schwarz_complex(mu, {}, real_part(circle_trace(simple)), 0.0, opt);
        const auto ra = detail::term_ratios(a.term_sup);

        const ComplexPoly xi = ComplexPoly::var() + ComplexPoly::conj_var() * mu;
        const ComplexPoly rich = pow(xi, 3) + ComplexPoly::monomial(2, 2, cplx(0.5, -0.2)) +
                                 ComplexPoly::monomial(1, 3, cplx(0.3, 0.0));
        const ComplexSolveReport b = solve_schwarz_complex(mu, beltrami_apply(rich, mu), real_part(circle_trace(rich)),
                                                           rich(0.0).imag(), opt);
        const auto rb = detail::term_ratios(b.term_sup);
        const auto rl = detail::term_ratios(b.term_l2);
        double geo = std::numeric_limits<double>::quiet_NaN();
        if (rb.size() >= 2) {
            double s = 0.0;
            for (std::size_t k = 1; k < rb.size(); ++k) s += std::log(rb[k]);
            geo = std::exp(s / static_cast<double>(rb.size() - 1));
        }
        auto max_of = [](const std::vector<double>& v) {
            return v.empty() ? std::numeric_limits<double>::quiet_NaN() : *std::max_element(v.begin(), v.end());
        };
        out.metrics.push_back({tag + "single_mode_max_ratio", max_of(ra), c + 0.05});
        out.metrics.push_back({tag + "rich_geometric_rate", geo, c + 0.05});
        out.metrics.push_back({tag + "rich_max_l2_ratio", max_of(rl), c + 0.05});
        out.metrics.push_back({tag + "rich_max_sup_ratio", max_of(rb), 0.0, Compare::info});
    }
    out.limit_s = 120.0;
    return out;
}

inline CriterionResult criterion_dirichlet_gate(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 6;
    out.name = "Dirichlet gate";
    const DiskQuadrature quad(cfg.n_r, cfg.n_theta, cfg.eps_factor);
    const auto probes = dirichlet_probes();
    const ComplexBoundary z = ComplexBoundary::from_fourier({{1, 1.0}});
    const ComplexBoundary zs = ComplexBoundary::from_fourier({{-1, 1.0}});
    const DirichletCheck ok = dirichlet_check_complex(0.0, {}, z, probes, 1e-6, quad);
    const DirichletCheck bad = dirichlet_check_complex(0.0, {}, zs, probes, 1e-6, quad);

    DirichletProblem p;
    p.mu = Bicomplex(0.0);
    p.gamma = circle_trace(PolyField::var());
    SolveOptions opt;
    opt.tol_pde = cfg.tol_pde;
    opt.tol_boundary = cfg.tol_boundary;
    const SolveReport r = solve_dirichlet_bicomplex(p, quad, opt, probes);
    const double err = r.solution ? detail::sup_over(probe_points(100, 0.9),
                                                     [&](cplx w) { return bc_norm(r.solution(w) - bicomplexify(w)); })
                                  : std::numeric_limits<double>::infinity();
    p.gamma = circle_trace(PolyField::conj_var());
    const DirichletReport rb = dirichlet_solvability_check(p, probes, quad);

    out.metrics = {{"compatible_gap", ok.max_gap, 1e-6},
                   {"incompatible_gap", bad.max_gap, 1e-2, Compare::at_least},
                   {"bicomplex_compatible_gap", r.diagnostics.at("solvability_gap"), 1e-6},
                   {"bicomplex_incompatible_gap", rb.max_gap, 1e-2, Compare::at_least},
                   {"compatible_solution_error", err, 1e-5}};
    out.limit_s = 60.0;
    return out;
}

inline CriterionResult criterion_hoib(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 7;
    out.name = "HOIB round trip";
    auto rng = detail::criterion_rng(cfg, 7);
    std::uniform_int_distribution<int> order(1, 4);
    double rt = 0.0, comp = 0.0, ann = 0.0, mu_max = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int n = order(rng);
        const Bicomplex mu = detail::random_mu(rng, 0.5);
        mu_max = std::max(mu_max, bc_norm(mu));
        const HoibBundle<Bicomplex> b = random_bundle(mu, n, 5, rng);
        const PolyField w = assemble(b);
        ann = std::max(ann, beltrami_power(w, mu, n).max_coeff());
        const auto parts = extract_components(w, mu, n);
        rt = std::max(rt, (assemble(HoibBundle<Bicomplex>{n, parts, mu}) - w).max_coeff());
        for (int k = 0; k < n; ++k) comp = std::max(comp, (parts[k] - b.components[k]).max_coeff());

        const cplx cmu = std::polar(0.5 * std::uniform_real_distribution<double>(0.0, 1.0)(rng), 1.0 + i);
        const HoibBundle<cplx> cb = random_bundle(cmu, n, 5, rng);
        const ComplexPoly cw = assemble(cb);
        ann = std::max(ann, beltrami_power(cw, cmu, n).max_coeff());
        const auto cparts = extract_components(cw, cmu, n);
        rt = std::max(rt, (assemble(HoibBundle<cplx>{n, cparts, cmu}) - cw).max_coeff());
        for (int k = 0; k < n; ++k) comp = std::max(comp, (cparts[k] - cb.components[k]).max_coeff());
    }
    out.metrics = {{"max_mu_norm", mu_max, 0.5},
                   {"assemble_extract_assemble", rt, 1e-10},
                   {"extract_assemble_components", comp, 1e-10},
                   {"annihilation", ann, 1e-12}};
    out.limit_s = 10.0;
    return out;
}

namespace detail {

/// h = a(x) + i y with a' = (1 + mu)/(1 - mu) solves dh/dz* = mu d(conj h)/dz* for mu = 0.2 x.
inline cplx conj_beltrami_profile(cplx z) {
    const double x = z.real();
    return {-x - 10.0 * std::log(1.0 - 0.2 * x), z.imag()};
}

}  // namespace detail

inline CriterionResult criterion_vekua(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 8;
    out.name = "Vekua link";
    auto rng = detail::criterion_rng(cfg, 8);
    const PolyField mu = (PolyField::var() + PolyField::conj_var()) * Bicomplex(0.1);

    const PolyField f = detail::random_polyfield(rng, 4);
    const BicomplexField w = conjbel_to_vekua(f, mu);
    const BicomplexField back = vekua_to_conjbel(w, mu);
    double rt = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const cplx z = detail::random_point(rng, 0.99);
        rt = std::max(rt, bc_norm(back(z) - f(z)) / std::max(1.0, bc_norm(f(z))));
    }

    const double mu0 = 0.4;
    const PolyField fc = PolyField::var() + PolyField::conj_var() * Bicomplex(mu0);
    const PolyField wc = conjbel_to_vekua(fc, mu0);
    const auto pts = probe_points(64, 0.9);
    const double exact_res = vekua_residual(wc, {}).max_coeff();
    const double fd_res = detail::sup_over(pts, [&](cplx z) {
        return bc_norm(vekua_residual_at(wc, [](cplx) { return Bicomplex(0.0); }, z));
    });
    const double cb_res = conj_beltrami_residual(fc, PolyField::constant(mu0)).max_coeff();

    const cplx c0(0.3, 0.1);
    const BicomplexField fp = [c0](cplx z) {
        const cplx h = detail::conj_beltrami_profile(z) + c0;
        return Bicomplex::idem(std::conj(h), h);
    };
    const BicomplexField wp = conjbel_to_vekua(fp, mu);
    const double poly_res = detail::sup_over(pts, [&](cplx z) {
        return bc_norm(vekua_residual_at(wp, [&](cplx s) { return alpha_fd_at(mu, s); }, z));
    });
    const double poly_cb = detail::sup_over(pts, [&](cplx z) {
        const BicomplexField fb = [&](cplx s) { return bc_conj(fp(s)); };
        return bc_norm(fd_bicomplex(fp, z).delbar - mu(z) * fd_bicomplex(fb, z).delbar);
    });

    const AlphaSeries a = alpha_from_mu(mu, 12);
    const double dual = detail::sup_over(pts, [&](cplx z) { return bc_norm(a.alpha(z) - alpha_at(mu, z)); });

    out.metrics = {{"roundtrip_rel", rt, 1e-12},
                   {"constant_mu_conj_beltrami_residual", cb_res, 1e-12},
                   {"constant_mu_vekua_residual_exact", exact_res, std::min(1e-8, cfg.tol_pde)},
                   {"constant_mu_vekua_residual_fd", fd_res, std::min(1e-8, cfg.tol_pde)},
                   {"poly_mu_conj_beltrami_residual_fd", poly_cb, std::min(1e-4, cfg.tol_pde)},
                   {"poly_mu_vekua_residual_fd", poly_res, std::min(1e-4, cfg.tol_pde)},
                   {"alpha_series_vs_pointwise", dual, 1e-8},
                   {"alpha_series_tail_bound", a.error_bound, 1e-8}};
    out.limit_s = 30.0;
    return out;
}

inline CriterionResult criterion_hardy(const RunConfig& cfg) {
    CriterionResult out;
    out.id = 9;
    out.name = "Hardy profiling";
    auto rng = detail::criterion_rng(cfg, 9);
    const PolyField zh = PolyField::var();
    std::vector<double> radii = cfg.radii;
    for (double r : {0.9, 0.99, 0.999}) radii.push_back(r);
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    double mean_err = 0.0;
    for (double r : radii) mean_err = std::max(mean_err, std::abs(circle_mean(zh, 2.0, r) - r));

    const std::vector<double> ladder{0.9, 0.99, 0.999};
    const RadialProfile prof = boundary_gap_profile(zh, circle_trace(zh), 2.0, ladder);
    bool decreasing = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (i > 0 && !(prof.gaps[i] < prof.gaps[i - 1])) decreasing = false;
        worst = std::max(worst, prof.gaps[i] / (2.0 * (1.0 - ladder[i])));
    }
    const bool chain = idempotent_hardy_check(zh, 2.0, radii).holds &&
                       idempotent_hardy_check(detail::random_polyfield(rng, 5), 2.0, radii).holds &&
                       idempotent_hardy_check(detail::random_polyfield(rng, 5), 1.0, radii).holds;
    out.metrics = {{"circle_mean_error", mean_err, 1e-12},
                   {"gaps_strictly_decreasing", decreasing ? 1.0 : 0.0, 1.0, Compare::at_least},
                   {"gap_over_2_one_minus_r", worst, 1.0},
                   {"comparability_chain", chain ? 1.0 : 0.0, 1.0, Compare::at_least}};
    out.limit_s = 10.0;
    return out;
}

using CriterionFn = std::function<CriterionResult(const RunConfig&)>;

inline std::vector<CriterionFn> criteria_1_to_9() {
    return {criterion_algebra,  criterion_operators,      criterion_schwarz_mu0,
            criterion_manufactured_schwarz, criterion_series_decay, criterion_dirichlet_gate,
            criterion_hoib,     criterion_vekua,          criterion_hardy};
}

inline CriterionResult timed(const CriterionFn& fn, const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = fn(cfg);
    r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

using Progress = std::function<void(const CriterionResult&)>;

/**
 * @brief Runs criteria 1-9 and, when requested, criterion 10: a second full run
 *        whose summary must be byte-identical to the first.
 */
inline SuiteResult run_suite(const RunConfig& cfg, bool determinism = true, const Progress& progress = {}) {
    cfg.validate();
    SuiteResult res;
    res.seed = cfg.seed;
    res.config = cfg.entries();
    for (const auto& fn : criteria_1_to_9()) {
        res.criteria.push_back(timed(fn, cfg));
        if (progress) progress(res.criteria.back());
    }
    if (determinism) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteResult again;
        again.seed = cfg.seed;
        again.config = cfg.entries();
        for (const auto& fn : criteria_1_to_9()) again.criteria.push_back(fn(cfg));
        const bool same = summary_json(res).dump() == summary_json(again).dump();
        CriterionResult d;
        d.id = 10;
        d.name = "determinism";
        d.metrics = {{"identical_summaries", same ? 1.0 : 0.0, 1.0, Compare::at_least}};
        d.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        res.criteria.push_back(d);
        if (progress) progress(res.criteria.back());
    }
    return res;
}

/// One line per criterion: `PASS criterion 3: Schwarz mu=0 oracle (1.2 s) name=value<=bound ...`.
inline std::string criterion_line(const CriterionResult& c) {
    char buf[256];
    std::snprintf(buf, sizeof buf, " (%.2f s", c.runtime_s);
    std::string s = std::string(c.pass() ? "PASS" : "FAIL") + " criterion " + std::to_string(c.id) + ": " + c.name + buf;
    if (c.limit_s > 0.0) {
        std::snprintf(buf, sizeof buf, ", limit %.0f s", c.limit_s);
        s += buf;
    }
    s += ")";
    for (const auto& m : c.metrics) {
        std::snprintf(buf, sizeof buf, " %s=%.3g", m.name.c_str(), m.value);
        s += buf;
        if (m.cmp != Compare::info) {
            std::snprintf(buf, sizeof buf, "%s%.3g", detail::compare_name(m.cmp), m.bound);
            s += buf;
            if (!m.pass()) s += "!";
        }
    }
    return s;
}

}  // namespace bcdisk
