#include <random>

#include <gtest/gtest.h>

#include "bcdisk/bvp.hpp"

using namespace bcdisk;

namespace {

double sup_error(const BicomplexField& w, const PolyField& exact) {
    double e = 0.0;
    for (cplx z : probe_points(200, 0.9)) e = std::max(e, bc_norm(w(z) - exact(z)));
    return e;
}

double sup_error(const ComplexField& w, const ComplexPoly& exact, double r = 0.9) {
    double e = 0.0;
    for (cplx z : probe_points(200, r)) e = std::max(e, std::abs(w(z) - exact(z)));
    return e;
}

}  // namespace

TEST(SchwarzComplex, MuZeroCosine) {
    const ComplexSolveReport r = solve_schwarz_complex(0.0, {}, cos_mode(1), 0.0);
    EXPECT_TRUE(r.accepted);
    EXPECT_LE(sup_error(r.solution, ComplexPoly::var()), 1e-12);
    EXPECT_LE(r.pde_residual_max, 1e-8);
}

TEST(SchwarzComplex, MuZeroUnitSourceMatchesDbarPath) {
    const ComplexPoly one = ComplexPoly::constant(1.0);
    const ComplexSolveReport a = solve_schwarz_complex(0.0, one, RealBoundary{}, 0.0);
    const ComplexSolveReport b = solve_schwarz_dbar(one, RealBoundary{}, 0.0, DiskQuadrature(128, 512));
    for (cplx z : probe_points(30, 0.9)) EXPECT_LE(std::abs(a.solution(z) - b.solution(z)), 1e-6);
}

TEST(SchwarzComplex, ManufacturedRealMu) {
    const ComplexPoly w = ComplexPoly::var() + ComplexPoly::conj_var() * cplx(0.3);
    const ComplexSolveReport r = solve_schwarz_complex(0.3, {}, real_part(circle_trace(w)), 0.0);
    EXPECT_TRUE(r.accepted) << r.message;
    EXPECT_LE(sup_error(r.solution, w), 1e-4);
}

TEST(SchwarzComplex, SeriesFormsAgreeOnlyForRealMu) {
    const ComplexPoly z = ComplexPoly::var(), zs = ComplexPoly::conj_var();
    const ComplexPoly f = z * zs * cplx(0.5) + zs * zs;
    const RealBoundary g = cos_mode(2);
    SolveOptions lit;
    lit.form = SeriesForm::literal;
    const auto a = solve_schwarz_complex(0.4, f, g, 0.0), b = solve_schwarz_complex(0.4, f, g, 0.0, lit);
    EXPECT_LE(sup_error(a.solution, *b.exact), 1e-12);
    const cplx mu = std::polar(0.4, 1.0);
    const auto c = solve_schwarz_complex(mu, f, g, 0.0), d = solve_schwarz_complex(mu, f, g, 0.0, lit);
    EXPECT_TRUE(c.accepted);
    EXPECT_GT(d.pde_residual_max, 1e-3);
}

TEST(SchwarzComplex, NearUnitMuFailsAtCap) {
    SolveOptions opt;
    opt.tol = 1e-12;
    opt.series_cap = 40;
    const ComplexPoly f = ComplexPoly::conj_var() * ComplexPoly::var() + ComplexPoly::conj_var();
    const ComplexSolveReport r = solve_schwarz_complex(std::polar(0.999, 0.3), f, cos_mode(3), 0.0, opt);
    EXPECT_FALSE(r.converged);
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(r.series_terms_used, 40);
    EXPECT_THROW(solve_schwarz_complex(1.0, f, cos_mode(1), 0.0), std::domain_error);
}

TEST(SchwarzComplex, TermsDecayGeometrically) {
    const ComplexPoly z = ComplexPoly::var(), zs = ComplexPoly::conj_var();
    const ComplexPoly f = z * z * zs + zs * zs * zs * cplx(0.3);
    for (double c : {0.3, 0.6}) {
        const auto r = solve_schwarz_complex(std::polar(c, 0.9), f, cos_mode(1), 0.0);
        for (std::size_t k = 1; k < r.term_l2.size() && r.term_l2[k] > 1e-10 * r.term_l2[0]; ++k)
            EXPECT_LE(r.term_l2[k] / r.term_l2[k - 1], c + 1e-12);
    }
}

TEST(SchwarzDbar, Examples) {
    const DiskQuadrature quad(64, 256);
    const auto a = solve_schwarz_dbar([](cplx) { return cplx{}; }, cos_mode(1), 0.0, quad);
    EXPECT_LE(sup_error(a.solution, ComplexPoly::var()), 1e-10);
    const auto b = solve_schwarz_dbar([](cplx) { return cplx{}; }, RealBoundary{}, 5.0, quad);
    EXPECT_LE(std::abs(b.solution(cplx(0.3, 0.4)) - cplx(0.0, 5.0)), 1e-12);
    const auto c = solve_schwarz_dbar([](cplx z) { return std::conj(z); }, RealBoundary{}, 0.0, quad);
    EXPECT_LE(c.pde_residual_max, 1e-3);
}

TEST(SchwarzDbar, ReducesToSeriesSolverForRandomData) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const DiskQuadrature quad(64, 256);
    for (int trial = 0; trial < 5; ++trial) {
        std::map<int, cplx> m{{0, u(rng)}};
        for (int k = 1; k <= 4; ++k) {
            const cplx c(u(rng), u(rng));
            m[k] = c;
            m[-k] = std::conj(c);
        }
        const RealBoundary g = RealBoundary::from_fourier(m);
        const auto a = solve_schwarz_complex(0.0, {}, g, 0.2);
        const auto b = solve_schwarz_dbar([](cplx) { return cplx{}; }, g, 0.2, quad);
        EXPECT_LE(sup_error(b.solution, *a.exact), 1e-8);
    }
}

TEST(SchwarzDbar, GridIndependence) {
    auto f = [](cplx z) { return cplx(1.0) + z * std::conj(z); };
    const auto a = solve_schwarz_dbar(f, cos_mode(2), 0.0, DiskQuadrature(64, 256));
    const auto b = solve_schwarz_dbar(f, cos_mode(2), 0.0, DiskQuadrature(96, 512));
    for (cplx z : probe_points(20, 0.8)) EXPECT_LE(std::abs(a.solution(z) - b.solution(z)), 1e-6);
}

TEST(SchwarzBicomplex, MuZeroCosineGivesIdentity) {
    SchwarzProblem p;
    p.gamma1 = p.gamma2 = cos_mode(1);
    const SolveReport r = solve_schwarz_bicomplex(p);
    EXPECT_TRUE(r.accepted);
    EXPECT_LE(sup_error(r.solution, PolyField::var()), 1e-12);
}

TEST(SchwarzBicomplex, ConstantsFromPointConstraints) {
    SchwarzProblem p;
    p.a1 = 1.0;
    p.a2 = 2.0;
    const SolveReport r = solve_schwarz_bicomplex(p);
    const Bicomplex w = r.solution(cplx(0.2, -0.5));
    EXPECT_LE(std::abs(w.plus() - I), 1e-15);
    EXPECT_LE(std::abs(w.minus() - 2.0 * I), 1e-15);
    EXPECT_EQ(r.constraint_error, 0.0);
}

TEST(SchwarzBicomplex, ManufacturedFields) {
    const Bicomplex mu = Bicomplex::idem(std::polar(0.3, 0.7), std::polar(0.3, -1.9));
    const PolyField v = PolyField::var(), vs = PolyField::conj_var();
    for (const PolyField& w : {v + vs * mu, v * v * vs * Bicomplex(0.5) + vs * vs * mu + PolyField::constant(I)}) {
        const SolveReport r = solve_schwarz_bicomplex(schwarz_problem_for(w, mu));
        EXPECT_TRUE(r.accepted) << r.message;
        EXPECT_LE(sup_error(r.solution, w), 1e-4);
        EXPECT_LE(r.pde_residual_max, 1e-4);
        EXPECT_LE(r.boundary_error, 1e-3);
    }
}

TEST(SchwarzBicomplex, EmittedSolutionsMeetResidualBound) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const Bicomplex mu = Bicomplex::idem(cplx(0.3 * u(rng), 0.3 * u(rng)), cplx(0.3 * u(rng), 0.3 * u(rng)));
        PolyField f;
        f.add(1, 1, Bicomplex(cplx(u(rng), u(rng)), cplx(u(rng), u(rng))));
        f.add(0, 2, Bicomplex(cplx(u(rng), u(rng))));
        SchwarzProblem p{mu, f, cos_mode(1, u(rng)), sin_mode(2, u(rng)), u(rng), u(rng)};
        SolveOptions opt;
        const SolveReport r = solve_schwarz_bicomplex(p, opt);
        EXPECT_TRUE(r.solution);
        EXPECT_LE(r.pde_residual_max, 10.0 * opt.tol_pde);
        EXPECT_TRUE(r.accepted) << r.message;
    }
}

TEST(Dirichlet, CompatibleAndIncompatibleTraces) {
    const DiskQuadrature quad(32, 256);
    DirichletProblem p;
    p.gamma = circle_trace(PolyField::var());
    const DirichletReport ok = dirichlet_solvability_check(p, dirichlet_probes(), quad);
    EXPECT_TRUE(ok.solvable);
    EXPECT_LE(ok.max_gap, 1e-6);
    p.gamma = circle_trace(PolyField::conj_var());
    const DirichletReport bad = dirichlet_solvability_check(p, dirichlet_probes(), quad);
    EXPECT_FALSE(bad.solvable);
    EXPECT_GE(bad.max_gap, 1e-2);
    p.gamma = BicomplexBoundary{};
    EXPECT_EQ(dirichlet_solvability_check(p, dirichlet_probes(), quad).max_gap, 0.0);
}

TEST(Dirichlet, SolutionsForSimpleData) {
    const DiskQuadrature quad(32, 256);
    DirichletProblem p;
    p.gamma = circle_trace(PolyField::var());
    const SolveReport a = solve_dirichlet_bicomplex(p, quad);
    ASSERT_TRUE(a.accepted) << a.message;
    EXPECT_LE(sup_error(a.solution, PolyField::var()), 1e-5);

    p.gamma = BicomplexBoundary::from_fourier({{0, Bicomplex(1.0)}});
    const SolveReport b = solve_dirichlet_bicomplex(p, quad);
    ASSERT_TRUE(b.accepted);
    EXPECT_LE(sup_error(b.solution, PolyField::constant(1.0)), 1e-12);

    p.gamma = circle_trace(PolyField::conj_var());
    const SolveReport c = solve_dirichlet_bicomplex(p, quad);
    EXPECT_FALSE(c.accepted);
    EXPECT_FALSE(c.solution);
}

TEST(Dirichlet, ManufacturedNonzeroMu) {
    const DiskQuadrature quad(64, 256);
    const Bicomplex mu = Bicomplex::idem(cplx(0.2, 0.1), cplx(-0.25, 0.05));
    const PolyField w = PolyField::var() + PolyField::conj_var() * mu;
    DirichletProblem p;
    p.mu = mu;
    p.gamma = circle_trace(w);
    const SolveReport r = solve_dirichlet_bicomplex(p, quad);
    ASSERT_TRUE(r.accepted) << r.message;
    EXPECT_LE(sup_error(r.solution, w), 1e-3);

    DirichletProblem q;
    q.mu = mu;
    q.gamma = BicomplexBoundary::from_fourier({{0, Bicomplex(1.0)}});
    EXPECT_TRUE(solve_dirichlet_bicomplex(q, quad).accepted);
}

TEST(Dirichlet, LiteralFormDoublesIdentityTrace) {
    const DiskQuadrature quad(32, 256);
    const ComplexPoly z = ComplexPoly::var();
    const ComplexBoundary g = ComplexBoundary::from_fourier(circle_trace(z));
    const ComplexField lit = dirichlet_candidate({}, g, 0.0, quad, DirichletForm::literal);
    EXPECT_LE(std::abs(lit(cplx(0.3, 0.2)) - 2.0 * cplx(0.3, 0.2)), 1e-10);
    const ComplexField cor = dirichlet_candidate({}, g, 0.0, quad);
    EXPECT_LE(std::abs(cor(cplx(0.3, 0.2)) - cplx(0.3, 0.2)), 1e-10);
}

TEST(Dirichlet, ProbeValidity) {
    const DiskQuadrature quad(16, 64);
    for (double m : {0.0, 0.5, 0.9})
        for (cplx z : probe_points(50, 0.99)) EXPECT_TRUE(detail::probe_is_valid(std::polar(m, 0.4), z));
    EXPECT_THROW(dirichlet_check_complex(0.5, {}, ComplexBoundary{}, {cplx(1.0, 0.0)}, 1e-6, quad), std::domain_error);
    EXPECT_THROW(dirichlet_candidate({}, ComplexBoundary{}, 1.0, quad), std::domain_error);
}
