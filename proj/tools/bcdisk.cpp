// Command-line front end: solvers, HOIB tools, transforms, Hardy profiles and the acceptance suite.
//
// Exit status: 0 success, 1 rejected solve or failed criterion, 2 invalid input, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcdisk/bcdisk.hpp"

using namespace bcdisk;
using nlohmann::json;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_io = 3;

PolyField field_arg(const std::string& s) { return s == "zero" ? PolyField{} : load_polyfield(s); }

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f || !(f << text)) throw IoError("cannot write '" + out + "'");
}

json poly_json(const PolyField& f) {
    json a = json::array();
    for (const auto& [k, c] : f.terms())
        a.push_back({{"m", k.first}, {"n", k.second}, {"sc_re", c.sc().real()}, {"sc_im", c.sc().imag()},
                     {"vec_re", c.vec().real()}, {"vec_im", c.vec().imag()}});
    return a;
}

std::pair<int, int> parse_grid(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw std::invalid_argument("probe grid must look like 64x256");
    const int a = detail::parse_int(s.substr(0, x), "probe grid");
    const int b = detail::parse_int(s.substr(x + 1), "probe grid");
    if (a < 1 || b < 1) throw std::invalid_argument("probe grid sizes must be positive");
    return {a, b};
}

SolveOptions options_from(const RunConfig& cfg) {
    SolveOptions o;
    o.series_cap = cfg.series_cap;
    o.tol_pde = cfg.tol_pde;
    o.tol_boundary = cfg.tol_boundary;
    return o;
}

DiskQuadrature quadrature_from(const RunConfig& cfg) { return {cfg.n_r, cfg.n_theta, cfg.eps_factor}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bcdisk: bicomplex Beltrami boundary problems on the unit disk"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "key = value config file (default: $BCDISK_CONFIG)");
    app.add_option("--set", overrides, "override a config key, key=value")->take_all();

    // solve
    auto* solve = app.add_subcommand("solve", "boundary value problems")->require_subcommand(1);

    auto* schwarz = solve->add_subcommand("schwarz", "Schwarz problem for dw/dz* = mu dw/dz + f");
    std::string s_mu = "0", s_f = "zero", s_g1, s_g2, s_out;
    double s_a1 = 0.0, s_a2 = 0.0, s_tol = 1e-6;
    std::string s_form = "neumann";
    schwarz->add_option("--mu", s_mu, "bicomplex constant, a+bi|c+di or idem:p|q");
    schwarz->add_option("--f", s_f, "right-hand side polyfield file or 'zero'");
    schwarz->add_option("--gamma1", s_g1, "Fourier file of the plus boundary data")->required();
    schwarz->add_option("--gamma2", s_g2, "Fourier file of the minus boundary data")->required();
    schwarz->add_option("--a1", s_a1);
    schwarz->add_option("--a2", s_a2);
    schwarz->add_option("--tol", s_tol, "series truncation tolerance");
    schwarz->add_option("--series-form", s_form)->check(CLI::IsMember({"neumann", "literal"}));
    schwarz->add_option("--out", s_out, "report path (default stdout)");

    auto* dirichlet = solve->add_subcommand("dirichlet", "Dirichlet problem with solvability gate");
    std::string d_mu = "0", d_f = "zero", d_gamma, d_out, d_form = "corrected", d_kp, d_km;
    double d_tol = 1e-6;
    bool d_check_only = false;
    dirichlet->add_option("--mu", d_mu);
    dirichlet->add_option("--f", d_f);
    dirichlet->add_option("--gamma", d_gamma, "Fourier file of the bicomplex boundary trace")->required();
    dirichlet->add_option("--tol", d_tol, "solvability gap tolerance");
    dirichlet->add_option("--form", d_form)->check(CLI::IsMember({"corrected", "literal"}));
    dirichlet->add_option("--kernel-plus", d_kp, "kernel constant of the plus problem");
    dirichlet->add_option("--kernel-minus", d_km, "kernel constant of the minus problem");
    dirichlet->add_flag("--check-only", d_check_only);
    dirichlet->add_option("--out", d_out);

    // hoib
    auto* hoib = app.add_subcommand("hoib", "higher-order Beltrami bundles")->require_subcommand(1);
    auto* roundtrip = hoib->add_subcommand("roundtrip", "random bundle assemble/extract round trip");
    int h_n = 3, h_degree = 3;
    std::string h_mu = "0";
    std::uint64_t h_seed = 0;
    roundtrip->add_option("--n", h_n)->check(CLI::Range(1, 12));
    roundtrip->add_option("--mu", h_mu);
    auto* seed_opt = roundtrip->add_option("--seed", h_seed);
    roundtrip->add_option("--degree", h_degree)->check(CLI::Range(0, 12));

    auto* extract = hoib->add_subcommand("extract", "split a field into bundle components");
    std::string e_in, e_mu = "0", e_prefix;
    int e_n = 3;
    extract->add_option("--in", e_in)->required();
    extract->add_option("--n", e_n)->check(CLI::Range(1, 12));
    extract->add_option("--mu", e_mu);
    extract->add_option("--out-prefix", e_prefix, "write PREFIX_k.txt per component instead of JSON");

    // transform
    auto* transform = app.add_subcommand("transform", "equation transforms")->require_subcommand(1);
    auto* c2v = transform->add_subcommand("conjbel-to-vekua", "conjugate Beltrami solution to Vekua solution");
    std::string t_mu, t_f, t_grid = "64x256", t_out;
    double t_rmax = 0.9;
    c2v->add_option("--mu-file", t_mu, "real-valued coefficient polyfield")->required();
    c2v->add_option("--f-file", t_f)->required();
    c2v->add_option("--probe-grid", t_grid, "NRxNT polar probe grid");
    c2v->add_option("--r-max", t_rmax)->check(CLI::Range(0.0, 0.999));
    c2v->add_option("--out", t_out);

    // hardy
    auto* hardy = app.add_subcommand("hardy", "Hardy space diagnostics")->require_subcommand(1);
    auto* profile = hardy->add_subcommand("profile", "circle means and boundary gaps");
    std::string p_field, p_trace, p_out, p_radii;
    double p_p = 2.0;
    profile->add_option("--field", p_field)->required();
    profile->add_option("--p", p_p);
    profile->add_option("--radii", p_radii, "comma separated (default: config radii)");
    profile->add_option("--trace", p_trace, "Fourier file of boundary values (default: the field's own trace)");
    profile->add_option("--out", p_out);

    // suite
    auto* suite = app.add_subcommand("suite", "acceptance suite")->require_subcommand(1);
    auto* run = suite->add_subcommand("run", "run every criterion");
    std::string r_summary;
    run->add_option("--summary", r_summary, "summary JSON path (default: out_dir/summary)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input;
    }

    try {
        const RunConfig cfg = load_config(config_path, overrides);

        if (schwarz->parsed()) {
            SchwarzProblem p;
            p.mu = parse_bicomplex(s_mu);
            p.f = field_arg(s_f);
            p.gamma1 = load_complex_fourier(s_g1);
            p.gamma2 = load_complex_fourier(s_g2);
            p.a1 = s_a1;
            p.a2 = s_a2;
            p.tol = s_tol;
            p.series_cap = cfg.series_cap;
            SolveOptions o = options_from(cfg);
            o.form = s_form == "literal" ? SeriesForm::literal : SeriesForm::neumann;
            const SolveReport r = solve_schwarz_bicomplex(p, o);
            emit(s_out, report_json(r).dump(2) + "\n");
            return r.accepted ? 0 : exit_fail;
        }

        if (dirichlet->parsed()) {
            DirichletProblem p;
            p.mu = parse_bicomplex(d_mu);
            p.f = field_arg(d_f);
            p.gamma = load_fourier(d_gamma);
            p.tol = d_tol;
            p.form = d_form == "literal" ? DirichletForm::literal : DirichletForm::corrected;
            if (!d_kp.empty()) p.kernel_plus = parse_complex(d_kp);
            if (!d_km.empty()) p.kernel_minus = parse_complex(d_km);
            const DiskQuadrature quad = quadrature_from(cfg);
            if (d_check_only) {
                const DirichletReport c = dirichlet_solvability_check(p, dirichlet_probes(), quad);
                json j{{"solvable", c.solvable},
                       {"max_gap", c.max_gap},
                       {"gaps", c.gaps},
                       {"series_terms", std::max(c.plus.series_terms, c.minus.series_terms)}};
                emit(d_out, j.dump(2) + "\n");
                return c.solvable ? 0 : exit_fail;
            }
            const SolveReport r = solve_dirichlet_bicomplex(p, quad, options_from(cfg));
            emit(d_out, report_json(r).dump(2) + "\n");
            return r.accepted ? 0 : exit_fail;
        }

        if (roundtrip->parsed()) {
            const Bicomplex mu = parse_bicomplex(h_mu);
            require_elliptic(mu);
            std::mt19937_64 rng(seed_opt->count() ? h_seed : cfg.seed);
            const HoibBundle<Bicomplex> b = random_bundle(mu, h_n, h_degree, rng);
            const PolyField w = assemble(b);
            const auto parts = extract_components(w, mu, h_n);
            const PolyField again = assemble(HoibBundle<Bicomplex>{h_n, parts, mu});
            double comp = 0.0;
            for (int k = 0; k < h_n; ++k) comp = std::max(comp, (parts[k] - b.components[k]).max_coeff());
            const double round = (again - w).max_coeff();
            const double annihilation = beltrami_power(w, mu, h_n).max_coeff();
            const bool ok = comp <= 1e-10 && round <= 1e-10 && annihilation <= 1e-12;
            json j{{"n", h_n},
                   {"mu", format_bicomplex(mu)},
                   {"component_error", comp},
                   {"roundtrip_error", round},
                   {"annihilation", annihilation},
                   {"pass", ok}};
            std::cout << j.dump(2) << "\n";
            return ok ? 0 : exit_fail;
        }

        if (extract->parsed()) {
            const Bicomplex mu = parse_bicomplex(e_mu);
            require_elliptic(mu);
            const auto parts = extract_components(load_polyfield(e_in), mu, e_n);
            if (!e_prefix.empty()) {
                for (int k = 0; k < e_n; ++k) {
                    auto out = detail::open_out(e_prefix + "_" + std::to_string(k) + ".txt");
                    write_polyfield(out, parts[k]);
                }
                return 0;
            }
            json a = json::array();
            for (const auto& p : parts) a.push_back(poly_json(p));
            std::cout << json{{"n", e_n}, {"mu", format_bicomplex(mu)}, {"components", a}}.dump(2) << "\n";
            return 0;
        }

        if (c2v->parsed()) {
            const PolyField mu = load_polyfield(t_mu);
            const PolyField f = load_polyfield(t_f);
            const auto [n_r, n_t] = parse_grid(t_grid);
            const double cb = conj_beltrami_residual(f, mu).max_coeff();
            const BicomplexField w = conjbel_to_vekua(f, mu);
            const BicomplexField back = vekua_to_conjbel(w, mu);
            json samples = json::array();
            double vek = 0.0, rt = 0.0;
            for (int i = 0; i < n_r; ++i) {
                const double r = t_rmax * (i + 0.5) / n_r;
                for (int t = 0; t < n_t; ++t) {
                    const double th = 2.0 * std::numbers::pi * t / n_t;
                    const cplx z = std::polar(r, th);
                    const Bicomplex v = w(z);
                    samples.push_back(sample_json(r, th, v));
                    vek = std::max(vek, bc_norm(vekua_residual_at(w, [&](cplx s) { return alpha_fd_at(mu, s); }, z)));
                    rt = std::max(rt, bc_norm(back(z) - f(z)));
                }
            }
            json j{{"conj_beltrami_residual", cb},
                   {"vekua_residual_fd_max", vek},
                   {"roundtrip_max", rt},
                   {"probe_grid", {n_r, n_t}},
                   {"samples", samples}};
            emit(t_out, j.dump(1) + "\n");
            return 0;
        }

        if (profile->parsed()) {
            const PolyField w = load_polyfield(p_field);
            const std::vector<double> radii = p_radii.empty() ? cfg.radii : detail::parse_list(p_radii, "radii");
            const BicomplexBoundary trace = p_trace.empty() ? circle_trace(w) : load_fourier(p_trace);
            const RadialProfile prof = boundary_gap_profile(w, trace, p_p, radii, cfg.n_theta);
            if (p_out.empty() || p_out == "-") {
                write_profile_csv(std::cout, prof);
            } else {
                auto out = detail::open_out(p_out);
                write_profile_csv(out, prof);
            }
            return 0;
        }

        if (run->parsed()) {
            const SuiteResult res = run_suite(cfg, true, [](const CriterionResult& c) {
                std::cout << criterion_line(c) << std::endl;
            });
            const std::string path = r_summary.empty() ? cfg.out_dir + "/" + cfg.summary : r_summary;
            emit(path, summary_json(res).dump(2) + "\n");
            std::cout << (res.pass() ? "suite PASS" : "suite FAIL") << " (summary: " << path << ")\n";
            return res.pass() ? 0 : exit_fail;
        }
    } catch (const IoError& e) {
        std::cerr << "bcdisk: I/O error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "bcdisk: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
