#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bohrlab/errors.hpp"
#include "bohrlab/radii.hpp"

namespace bohr {
namespace {

// Root of a^p + (1 - a^2) r / (1 - a r) = 1, where the automorphism attains
// the head bound.
double automorphism_radius(double p, double a)
{
    const double gap = 1.0 - std::pow(a, p);
    return gap / ((1.0 - a * a) + a * gap);
}

TEST(Radii, BisectRoot)
{
    EXPECT_NEAR(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0), std::numbers::sqrt2, 1e-15);
    EXPECT_THROW(bisect_root([](double x) { return x * x + 1.0; }, 0.0, 2.0), BadBracket);
}

TEST(Radii, PowerRatio)
{
    for (double x : {0.0, 0.25, 0.5, 0.99}) {
        EXPECT_NEAR(power_ratio(2.0, x), 1.0, 1e-15);
        EXPECT_NEAR(power_ratio(1.0, x), 1.0 + x, 1e-14);
    }
    for (double p : {0.5, 1.0, 3.0}) {
        EXPECT_DOUBLE_EQ(power_ratio(p, 1.0), 2.0 / p);
        EXPECT_NEAR(power_ratio(p, 1.0 - 1e-9), 2.0 / p, 1e-8);
    }
}

TEST(Radii, BranchPoint)
{
    EXPECT_NEAR(branch_point(1.0), 0.5, 1e-15);
    EXPECT_NEAR(branch_point(2.0), (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
    // sqrt(x) = (sqrt(5) - 1)/2 for p = 1/2.
    EXPECT_NEAR(branch_point(0.5), std::pow((std::sqrt(5.0) - 1.0) / 2.0, 2.0), 1e-15);
    EXPECT_THROW(branch_point(0.0), ParamOutOfRange);
}

TEST(Radii, HeadRadiusClosedForms)
{
    for (double p : {0.5, 1.0, 2.0, 4.0}) {
        EXPECT_NEAR(head_radius(p, 0.0), 1.0 / std::numbers::sqrt2, 1e-12);
        EXPECT_NEAR(head_radius(p, 1.0), p / (2.0 + p), 1e-12);
    }
    EXPECT_NEAR(classical_radius(1.0), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(classical_radius(0.5), 0.5, 1e-15);
    EXPECT_NEAR(classical_radius(0.2), std::sqrt(0.4), 1e-15);
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        EXPECT_NEAR(head_radius(1.0, x), classical_radius(x), 1e-12) << x;
    }
}

TEST(Radii, OuterBranchIsTheAutomorphismRadius)
{
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
        for (double a = branch_point(p); a < 0.999; a += 0.05) {
            EXPECT_NEAR(head_radius(p, a), automorphism_radius(p, a), 1e-12) << p << " " << a;
        }
    }
}

TEST(Radii, FourthPowerOrdering)
{
    const double r_half = head_radius(4.0, 0.5);
    const double r_third = head_radius(4.0, 1.0 / 3.0);
    const double r_zero = head_radius(4.0, 0.0);
    const double r_one = head_radius(4.0, 1.0);
    EXPECT_GT(r_half, r_third);
    EXPECT_GT(r_third, r_zero);
    EXPECT_GT(r_zero, r_one);
    EXPECT_GT(r_one, 0.5);
}

TEST(Radii, HarmonicRadiusSmallCases)
{
    // k = 0, m = 1, p = 1, a = 0: 3r - r^2 - 1 = 0.
    EXPECT_NEAR(harmonic_radius({1.0, 0.0, 1, 0.0}), (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
        for (double a : {0.0, 0.5, 0.9}) {
            const RadiusParams params{p, 0.5, 2, a};
            const double r = harmonic_radius(params);
            EXPECT_NEAR(radius_polynomial(params, r), 0.0, 1e-12);
            EXPECT_NEAR(normalized_gap(params, r), 0.0, 1e-11);
        }
    }
    EXPECT_THROW(harmonic_radius({1.0, 0.0, 1, 1.0}), ParamOutOfRange);
    EXPECT_THROW(harmonic_radius({1.0, 0.0, 0, 0.5}), ParamOutOfRange);
    EXPECT_THROW(harmonic_radius({-1.0, 0.0, 1, 0.5}), ParamOutOfRange);
    EXPECT_THROW(normalized_gap({1.0, 0.0, 1, 0.5}, 1.0), RadiusOutOfRange);
}

TEST(Radii, UniformRadius)
{
    for (double p : {0.5, 1.0, 1.5, 2.0}) {
        EXPECT_NEAR(uniform_harmonic_radius({p, 0.0, 1, 0.0}), p / (std::sqrt(4.0 * p + 1.0) + p + 1.0), 1e-12);
        for (double k : {0.0, 1.0}) {
            for (int m : {1, 3}) {
                const double r = uniform_harmonic_radius({p, k, m, 0.0});
                EXPECT_LE(r, uniform_harmonic_radius_bound(p, k));
                EXPECT_LE(uniform_harmonic_radius_bound(p, k), 1.0 / (2.0 + k) + 1e-15);
            }
        }
    }
    EXPECT_THROW(uniform_harmonic_radius({2.5, 0.0, 1, 0.0}), ParamOutOfRange);
}

TEST(Radii, LimitRadius)
{
    for (double k : {0.0, 0.5, 1.0}) {
        EXPECT_NEAR(limit_harmonic_radius({1.0, k, 1, 0.0}), 1.0 / (2.0 + k), 1e-15);
        const double a = 0.6;
        EXPECT_NEAR(limit_harmonic_radius({2.0, k, 1, a}),
                    (1.0 - a * a) / ((1.0 - a * a) + (1.0 + k) * (1.0 - a * a)), 1e-15);
        EXPECT_NEAR(limit_harmonic_radius_infimum(1.0, k), 1.0 / (2.0 * (1.0 + k) + 1.0), 1e-15);
        EXPECT_NEAR(limit_harmonic_radius_infimum(3.0, k), 1.0 / (2.0 + k), 1e-15);
    }
    EXPECT_NEAR(limit_harmonic_radius_infimum(1.0, 1.0), 0.2, 1e-15);
    EXPECT_NEAR(harmonic_radius_cap(0.5, 1.0), 1.0 / 4.0, 1e-15);
}

TEST(Radii, CrossoverRoots)
{
    const auto mid = crossover_roots(1.0 / std::numbers::sqrt2);
    EXPECT_NEAR(mid.plus, 1.0 / std::numbers::sqrt2, 1e-12);
    EXPECT_NEAR(mid.minus, 1.0 / std::numbers::sqrt2, 1e-12);
    const auto end = crossover_roots(1.0);
    EXPECT_NEAR(end.plus, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(end.minus, 1.0, 1e-15);
    const auto r = crossover_roots(0.9);
    EXPECT_LT(r.plus, r.minus);
    EXPECT_THROW(crossover_roots(0.5), ParamOutOfRange);
}

} // namespace
} // namespace bohr
