#include <gtest/gtest.h>

#include "bcdisk/boundary.hpp"
#include "bcdisk/grid.hpp"

using namespace bcdisk;

TEST(Boundary, FourierEvaluation) {
    const RealBoundary c = cos_mode(1), s = sin_mode(2, 3.0);
    for (double th : {0.0, 0.4, 2.0, 5.5}) {
        EXPECT_NEAR(std::abs(c(th) - std::cos(th)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(s(th) - 3.0 * std::sin(2.0 * th)), 0.0, 1e-14);
    }
    EXPECT_TRUE(is_real_valued(c));
    EXPECT_TRUE(is_real_valued(s));
    EXPECT_FALSE(is_real_valued(ComplexBoundary::from_fourier({{1, 1.0}})));
    EXPECT_EQ(c.max_frequency(), 1);
}

TEST(Boundary, SamplesRecoverTrigPolynomial) {
    const ComplexBoundary g = ComplexBoundary::from_fourier({{-3, cplx(0.2, 0.1)}, {0, 1.0}, {5, cplx(0.0, -0.4)}});
    const ComplexBoundary h = ComplexBoundary::from_samples(g.sample(32));
    for (const auto& [k, c] : h.coefficients()) {
        auto it = g.coefficients().find(k);
        const cplx want = it == g.coefficients().end() ? cplx{} : it->second;
        EXPECT_LE(std::abs(c - want), 1e-15) << "mode " << k;
    }
    for (double th : {0.1, 1.3, 4.0}) EXPECT_LE(std::abs(h(th) - g(th)), 1e-14);
    EXPECT_THROW(ComplexBoundary::from_samples({}), std::invalid_argument);
}

TEST(Boundary, RealPartOfTrace) {
    const RealBoundary r = real_part({{1, cplx(1.0, 2.0)}});
    for (double th : {0.0, 0.7, 3.0})
        EXPECT_NEAR(r(th).real(), std::cos(th) - 2.0 * std::sin(th), 1e-15);
    EXPECT_TRUE(is_real_valued(r));
}

TEST(Boundary, BicomplexData) {
    const BicomplexBoundary g = BicomplexBoundary::from_fourier({{1, Bicomplex::j()}});
    const Bicomplex v = g(0.5);
    EXPECT_LE(bc_norm(v - Bicomplex::j() * std::polar(1.0, 0.5)), 1e-16);
}

TEST(Grid, SampleConstant) {
    const PolarGrid g = default_grid();
    EXPECT_EQ(g.radii.size(), 64u);
    EXPECT_EQ(g.n_theta, 256);
    const auto s = sample([](cplx) { return 1.0; }, g);
    EXPECT_EQ(s.values.size(), 64u * 256u);
    for (double v : s.values) EXPECT_EQ(v, 1.0);
    EXPECT_EQ(s.at(3, 7), 1.0);
    PolarGrid bad{{0.5, 0.4}, 8};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}
