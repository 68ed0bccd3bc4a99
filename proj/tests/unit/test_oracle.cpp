#include <gtest/gtest.h>

#include <cmath>

#include "bohrlab/families.hpp"
#include "bohrlab/oracle.hpp"
#include "bohrlab/props.hpp"
#include "bohrlab/quasisub.hpp"

namespace bohr {
namespace {

LongComplex automorphism(long double a, LongComplex z)
{
    return (z + a) / (1.0L + a * z);
}

TEST(Oracle, SampleCount)
{
    EXPECT_EQ(dft_sample_count(0), 256u);
    EXPECT_EQ(dft_sample_count(32), 256u);
    EXPECT_EQ(dft_sample_count(64), 512u);
}

TEST(Oracle, ConstantFunction)
{
    const auto c = dft_coefficients([](LongComplex) { return LongComplex(1.0L); }, 0.7, 30);
    EXPECT_NEAR(c[0].real(), 1.0, 1e-15);
    for (std::size_t n = 1; n <= 30; ++n) {
        EXPECT_LE(std::abs(c[n]), 1e-12);
    }
    EXPECT_GE(c.tail_cap(), 1.0);
}

TEST(Oracle, AutomorphismAgreesWithConstructor)
{
    const auto c = dft_coefficients([](LongComplex z) { return automorphism(0.5L, z); }, 0.5, 20);
    const auto f = disk_automorphism(0.5);
    for (std::size_t n = 0; n <= 20; ++n) {
        EXPECT_LT(std::abs(c[n] - f[n]), 1e-10) << n;
    }
}

TEST(Oracle, QuasiComposeAgreesPointwise)
{
    const auto t = random_quasi_triple(17);
    const auto f = quasi_compose(t.phi_series(kDefaultOrder), t.g, t.w_series(kDefaultOrder));
    const auto c = dft_coefficients(
        [&](LongComplex z) {
            const LongComplex w = z * t.inner(z);
            LongComplex g{};
            for (std::size_t n = t.g.order() + 1; n-- > 0;) {
                g = g * w + LongComplex(t.g[n].real(), t.g[n].imag());
            }
            return t.phi(z) * g;
        },
        0.7, 64);
    for (std::size_t n = 0; n <= 64; ++n) {
        EXPECT_LT(std::abs(c[n] - f[n]), 1e-9) << n;
    }
}

TEST(Oracle, GridModulus)
{
    const auto b = random_blaschke_product(6, 4);
    EXPECT_LE(grid_modulus_check([&](LongComplex z) { return b(z); }, 0.99, 1000), 1.0 + 1e-12);
    EXPECT_NEAR(grid_modulus_check([](LongComplex z) { return 1.1L * z; }, 0.95, 64), 1.1 * 0.95, 1e-15);
    for (double a : {0.2, 0.8}) {
        for (double r : {0.5, 0.9}) {
            EXPECT_NEAR(grid_modulus_check([a](LongComplex z) { return automorphism(a, z); }, r, 200),
                        (r + a) / (1.0 + a * r), 1e-10);
        }
    }
}

TEST(Oracle, StencilDerivative)
{
    const auto cube = [](LongComplex z) { return z * z * z; };
    const LongComplex z(0.3L, -0.2L);
    EXPECT_LT(std::abs(stencil_derivative(cube, z) - 3.0L * z * z), 1e-15L);
    const auto d = stencil_derivative([](LongComplex w) { return automorphism(0.5L, w); }, z, 1e-4L);
    const LongComplex exact = 0.75L / ((1.0L + 0.5L * z) * (1.0L + 0.5L * z));
    EXPECT_LT(std::abs(d - exact), 1e-13L);
}

TEST(Oracle, DilatationRatios)
{
    for (double k : {0.0, 0.3, 1.0}) {
        const auto s = dilatation_check(extremal_harmonic(0.4, k), 0.8, 128);
        EXPECT_NEAR(s.max_ratio, k, 1e-10);
        EXPECT_EQ(s.sampled, 128u);
        EXPECT_EQ(s.skipped, 0u);
    }
    const auto pair = dilatation_pair(random_blaschke(3, 8), random_blaschke(2, 9), 0.6);
    EXPECT_LE(dilatation_check(pair, 0.9, 256).max_ratio, 0.6 + 1e-10);

    // h' = 2z vanishes at the only sampled point of the degenerate circle.
    const HarmonicPair sq(TruncatedSeries::monomial(2, 1.0, 20), TruncatedSeries::zero(20), 0.5);
    const auto s = dilatation_check(sq, 0.0, 16);
    EXPECT_EQ(s.skipped, 16u);
    EXPECT_EQ(s.sampled, 0u);
}

TEST(Oracle, MembershipHeuristic)
{
    EXPECT_TRUE(sample_membership(extremal_harmonic(0.3, 0.7)).member);
    const auto z = TruncatedSeries::identity(20);
    const HarmonicPair outside(z, Complex(0.9) * z, 0.5);
    const auto s = sample_membership(outside);
    EXPECT_FALSE(s.member);
    EXPECT_NEAR(s.max_ratio, 0.9, 1e-12);
}

} // namespace
} // namespace bohr
