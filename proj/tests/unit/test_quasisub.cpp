#include <gtest/gtest.h>

#include <cmath>

#include "bohrlab/errors.hpp"
#include "bohrlab/families.hpp"
#include "bohrlab/props.hpp"
#include "bohrlab/quasisub.hpp"
#include "bohrlab/radii.hpp"

namespace bohr {
namespace {

TruncatedSeries poly(std::vector<Complex> c, std::size_t order)
{
    c.resize(order + 1);
    return TruncatedSeries(std::move(c));
}

TEST(QuasiSub, ComposeMatchesPointwiseDefinition)
{
    const auto phi = poly({0.5, Complex(0.0, 0.25)}, 30);
    const auto g = poly({0.1, 0.3, -0.2, 0.1}, 30);
    const auto w = poly({0.0, 0.5, 0.25}, 30);
    const auto f = quasi_compose(phi, g, w);
    for (Complex z : {Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.0, 0.7)}) {
        const Complex wz = 0.5 * z + 0.25 * z * z;
        const Complex expected = (0.5 + Complex(0.0, 0.25) * z) * (0.1 + 0.3 * wz - 0.2 * wz * wz + 0.1 * wz * wz * wz);
        EXPECT_LT(std::abs(f.evaluate_truncated(z) - expected), 1e-14);
    }
    EXPECT_THROW(quasi_compose(phi, g, poly({0.2, 0.5}, 30)), NonVanishingInnerConstant);
}

TEST(QuasiSub, Radius)
{
    EXPECT_NEAR(quasi_subordination_radius(1.0, 1.0), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(quasi_subordination_radius(0.0, 1.0), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(quasi_subordination_radius(0.0, 0.0), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(QuasiSub, HeadSumOfAutomorphism)
{
    for (double a : {0.2, 0.7}) {
        const auto f = disk_automorphism(a);
        for (double p : {0.5, 1.0, 2.0}) {
            for (double r : {0.1, 0.4, 0.7}) {
                const double exact = std::pow(a, p) + (1.0 - a * a) * r / (1.0 - a * r);
                EXPECT_TRUE(bohr_head_sum(f, p, r).contains(exact, 1e-13));
            }
        }
    }
}

TEST(QuasiSub, HeadRadiusVerdicts)
{
    const auto f = disk_automorphism(0.7);
    EXPECT_EQ(verify_head_radius(f, 1.0).verdict, Verdict::Holds);
    EXPECT_EQ(head_sum_check(f, 1.0, 0.45).verdict, Verdict::Fails);
    const auto b = head_sum_crossover(f, 1.0, 0.0, 0.95);
    EXPECT_NEAR(b.mid(), 1.0 / 2.4, 1e-9);
}

TEST(QuasiSub, MajorantCompare)
{
    const auto z = TruncatedSeries::identity(20);
    const auto half = Complex(0.5) * z;
    EXPECT_EQ(majorant_compare(half, z, 0.5).verdict, Verdict::Holds);
    EXPECT_EQ(majorant_compare(z, half, 0.5).verdict, Verdict::Fails);
}

TEST(QuasiSub, QuasiSubordinationHoldsOnATriple)
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto t = random_quasi_triple(seed);
        const auto rep = verify_quasi_subordination(t.phi_series(kDefaultOrder), t.g, t.w_series(kDefaultOrder));
        EXPECT_EQ(rep.verdict, Verdict::Holds) << seed;
        EXPECT_GT(rep.predicted_radius, 1.0 / 3.0 - 1e-12);
    }
}

TEST(QuasiSub, SquareMajorantMatchesDirectSum)
{
    for (double a : {0.5, 0.9}) {
        std::vector<double> m(400);
        m[0] = -a;
        for (std::size_t n = 1; n < m.size(); ++n) {
            m[n] = (1.0 - a * a) * std::pow(a, static_cast<double>(n - 1));
        }
        for (double r : {0.3, 0.5}) {
            double direct = 0.0;
            for (std::size_t j = 0; j < m.size(); ++j) {
                double c = 0.0;
                for (std::size_t i = 0; i <= j; ++i) {
                    c += m[i] * m[j - i];
                }
                direct += std::abs(c) * std::pow(r, static_cast<double>(j));
            }
            EXPECT_NEAR(square_majorant(a, r), direct, 1e-12);
            EXPECT_NEAR(square_majorant_partial(a, r, 399), direct, 1e-12);
        }
    }
}

TEST(QuasiSub, SquareMajorantLimit)
{
    const double a = 0.9;
    const auto roots = crossover_roots(a);
    EXPECT_NEAR(square_majorant_limit(a, roots.plus), 1.0, 1e-12);
    for (double r : {0.1, 0.3, 0.5, 0.7}) {
        EXPECT_LE(square_majorant_limit(a, r), square_majorant(a, r) + 1e-12);
    }
    const auto b = majorant_crossover(subordinate_square(a), TruncatedSeries::monomial(2, 1.0, kDefaultOrder), 0.25,
                                      0.5);
    EXPECT_GE(b.mid(), classical_radius(a * a) - 1e-7);
    EXPECT_LE(b.mid(), roots.plus + 1e-7);
}

} // namespace
} // namespace bohr
