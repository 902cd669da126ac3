#include <random>

#include <gtest/gtest.h>

#include "bcdisk/transforms.hpp"

using namespace bcdisk;

namespace {

const PolyField v = PolyField::var(), vs = PolyField::conj_var();

PolyField random_field(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PolyField f;
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; m + n <= degree; ++n) {
            const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
            f.add(m, n, Bicomplex(cplx(a, b), cplx(c, d)));
        }
    return f;
}

/// Solution of dh/dz* = mu d(conj h)/dz* for mu = 0.2 x: h = a(x) + i y with a' = (1 + mu)/(1 - mu).
cplx profile(cplx z) { return {-z.real() - 10.0 * std::log(1.0 - 0.2 * z.real()), z.imag()}; }

}  // namespace

TEST(ConjBeltrami, Examples) {
    const PolyField mu0 = PolyField::constant(0.4);
    EXPECT_TRUE(conj_beltrami_residual(PolyField::constant(2.0), mu0).empty());
    std::mt19937_64 rng(41);
    const PolyField f = random_field(rng, 3);
    EXPECT_EQ((conj_beltrami_residual(f, {}) - bc_delbar(f)).prune().max_coeff(), 0.0);
    EXPECT_LE(conj_beltrami_residual(v + vs * Bicomplex(0.4), mu0).max_coeff(), 1e-12);
    EXPECT_THROW(conj_beltrami_residual(f, PolyField::constant(Bicomplex(cplx(0.1, 0.1)))), std::invalid_argument);
    EXPECT_THROW(conj_beltrami_residual(f, (v + vs) * Bicomplex(0.6)), std::domain_error);
}

TEST(Vekua, HolomorphicFieldsHaveZeroResidual) {
    const PolyField w = v * v + PolyField::constant(Bicomplex(cplx(1, 2), cplx(0, 1)));
    EXPECT_TRUE(vekua_residual(w, {}).empty());
    EXPECT_LE(bc_norm(vekua_residual_at(w, [](cplx) { return Bicomplex{}; }, cplx(0.2, 0.3))), 1e-8);
}

TEST(Gfoe, ReducesToDelbar) {
    std::mt19937_64 rng(42);
    const PolyField w = random_field(rng, 3);
    EXPECT_EQ((gfoe_residual(w, GfoeCoefficients{}) - bc_delbar(w)).prune().max_coeff(), 0.0);
    GfoeCoefficients bad{Bicomplex(0.6), Bicomplex(0.5), {}, {}};
    EXPECT_THROW(gfoe_residual(w, bad), std::domain_error);
}

TEST(Gfoe, SplitMatchesResidualComponents) {
    std::mt19937_64 rng(43);
    const PolyField w = random_field(rng, 3), A = random_field(rng, 1), B = random_field(rng, 1), f = random_field(rng, 2);
    const GfoeCoefficients c{Bicomplex::idem(cplx(0.2, 0.1), cplx(-0.1, 0.2)), Bicomplex::idem(cplx(0.1), cplx(0, 0.3)),
                             A, B};
    const PolyField r = gfoe_residual(w, c, f);
    const auto [plus, minus] = gfoe_split(w, c, f);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const cplx z = std::polar(0.95 * std::sqrt(u(rng)), 6.283 * u(rng));
        EXPECT_LE(std::abs(r(z).plus() - plus(z)), 1e-10);
        EXPECT_LE(std::abs(r(z).minus() - minus(z)), 1e-10);
    }
}

TEST(Gfoe, ComponentwiseRuleNeedsRealParts) {
    std::mt19937_64 rng(44);
    const GfoeCoefficients c{Bicomplex(0.2), Bicomplex(0.3), PolyField{}, PolyField::constant(0.5)};
    const PolyField general = random_field(rng, 3);
    const ComplexPoly h = minus_component(general);
    const PolyField split_real = from_components(conj_field(h), h);
    const cplx z(0.3, -0.4);
    {
        const auto [a, b] = gfoe_split(split_real, c, {}, ComponentConjugate::swap);
        const auto [p, q] = gfoe_split(split_real, c, {}, ComponentConjugate::componentwise);
        EXPECT_LE(std::abs(a(z) - p(z)) + std::abs(b(z) - q(z)), 1e-12);
    }
    const auto [a, b] = gfoe_split(general, c, {}, ComponentConjugate::swap);
    const auto [p, q] = gfoe_split(general, c, {}, ComponentConjugate::componentwise);
    EXPECT_GT(std::abs(a(z) - p(z)) + std::abs(b(z) - q(z)), 1e-3);
}

TEST(Alpha, Examples) {
    EXPECT_TRUE(alpha_from_mu(PolyField::constant(0.3)).alpha.empty());
    const PolyField mu = (v + vs) * Bicomplex(0.1);
    const AlphaSeries a = alpha_from_mu(mu);
    EXPECT_LE(bc_norm(a.alpha(0.0) + Bicomplex(0.1)), 1e-15);
    EXPECT_LE(bc_norm(alpha_at(mu, 0.0) + Bicomplex(0.1)), 1e-15);
    for (cplx z : {cplx(0.5, 0.1), cplx(-0.8, 0.3), cplx(0.0, 0.9)}) {
        EXPECT_LE(bc_norm(a.alpha(z) - alpha_at(mu, z)), 1e-8);
        EXPECT_LE(bc_norm(alpha_fd_at(mu, z) - alpha_at(mu, z)), 1e-8);
    }
    EXPECT_LE(a.error_bound, 1e-8);
    EXPECT_THROW(alpha_from_mu(PolyField::constant(1.0)), std::domain_error);
}

TEST(Alpha, TailBoundDominatesObservedError) {
    const PolyField mu = (v + vs) * Bicomplex(0.25);
    for (int degree : {2, 6, 12}) {
        const AlphaSeries a = alpha_from_mu(mu, degree);
        for (cplx z : {cplx(0.9, 0.0), cplx(0.5, 0.5), cplx(-0.99, 0.0)})
            EXPECT_LE(bc_norm(a.alpha(z) - alpha_at(mu, z)), a.error_bound * (1 + 1e-12));
    }
}

TEST(Transform, RoundTripAndIdentityAtZeroMu) {
    std::mt19937_64 rng(45);
    const PolyField f = random_field(rng, 3);
    const PolyField mu = (v + vs) * Bicomplex(0.1);
    const BicomplexField w = conjbel_to_vekua(f, mu);
    const BicomplexField back = vekua_to_conjbel(w, mu);
    const BicomplexField id = conjbel_to_vekua(f, PolyField{});
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const cplx z = std::polar(std::sqrt(u(rng)), 6.283 * u(rng));
        EXPECT_LE(bc_norm(back(z) - f(z)), 1e-12 * std::max(1.0, bc_norm(f(z))));
        EXPECT_LE(bc_norm(id(z) - f(z)), 0.0);
    }
    const Bicomplex x(cplx(0.3, 1.0), cplx(-2.0, 0.1));
    for (double m : {-0.9, 0.0, 0.5, 0.9})
        EXPECT_LE(bc_norm(vekua_to_conjbel(conjbel_to_vekua(x, m), m) - x), 1e-12);
    EXPECT_THROW(conjbel_to_vekua(x, 1.0), std::domain_error);
}

TEST(Transform, ConstantMuManufacturedSolution) {
    const PolyField f = v + vs * Bicomplex(0.4);
    const PolyField w = conjbel_to_vekua(f, 0.4);
    EXPECT_LE(vekua_residual(w, {}).max_coeff(), 1e-10);
    const BicomplexField wf = conjbel_to_vekua(f, PolyField::constant(0.4));
    for (cplx z : {cplx(0.1, 0.2), cplx(-0.5, 0.4)}) EXPECT_LE(bc_norm(wf(z) - w(z)), 1e-15);
}

TEST(Transform, PolynomialMuResidualEquivalence) {
    const PolyField mu = (v + vs) * Bicomplex(0.1);
    auto alpha = [&](cplx s) { return alpha_fd_at(mu, s); };
    const std::vector<cplx> pts{{0.1, 0.2}, {-0.5, 0.3}, {0.0, -0.7}, {0.6, 0.4}};
    for (double eps : {0.0, 0.05}) {
        const BicomplexField f = [eps](cplx z) {
            const cplx h = profile(z) + cplx(0.3, 0.1);
            return Bicomplex::idem(std::conj(h), h) + Bicomplex(eps * z * z);
        };
        const BicomplexField fb = [&](cplx z) { return bc_conj(f(z)); };
        const BicomplexField w = conjbel_to_vekua(f, mu);
        double cb = 0.0, vk = 0.0;
        for (cplx z : pts) {
            cb = std::max(cb, bc_norm(fd_bicomplex(f, z).delbar - mu(z) * fd_bicomplex(fb, z).delbar));
            vk = std::max(vk, bc_norm(vekua_residual_at(w, alpha, z)));
        }
        if (eps == 0.0) {
            EXPECT_LE(cb, 1e-8);
            EXPECT_LE(vk, 1e-8);
        } else {
            EXPECT_GE(cb, 1e-3);
            EXPECT_GE(vk, 1e-3);
        }
    }
}
