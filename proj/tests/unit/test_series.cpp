#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bohrlab/errors.hpp"
#include "bohrlab/families.hpp"
#include "bohrlab/random.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/series_json.hpp"

namespace bohr {
namespace {

// 1/(1 - z) stored to `order`, tail |c_n| <= 1.
TruncatedSeries geometric(std::size_t order)
{
    return TruncatedSeries(std::vector<Complex>(order + 1, 1.0), 1.0);
}

TruncatedSeries random_polynomial(Rng& rng, std::size_t degree, std::size_t order)
{
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 0; n <= degree; ++n) {
        c[n] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    return TruncatedSeries(std::move(c));
}

Complex naive_value(const TruncatedSeries& f, Complex z)
{
    Complex acc{};
    Complex x = 1.0;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        acc += f[n] * x;
        x *= z;
    }
    return acc;
}

TEST(Series, ConstructionRejectsBadInput)
{
    EXPECT_THROW(TruncatedSeries(std::vector<Complex>{}), ParamOutOfRange);
    EXPECT_THROW(TruncatedSeries(std::vector<Complex>{1.0}, -1.0), ParamOutOfRange);
    EXPECT_THROW(TruncatedSeries::monomial(5, 1.0, 3), ParamOutOfRange);
}

TEST(Series, GeometricSquaredHasLinearCoefficients)
{
    const auto f = cauchy_product(geometric(50), geometric(50));
    ASSERT_EQ(f.order(), 50u);
    for (std::size_t n = 0; n <= 50; ++n) {
        EXPECT_DOUBLE_EQ(f[n].real(), static_cast<double>(n + 1));
    }
    for (double r : {0.1, 0.5, 0.8}) {
        const auto m = majorant_sum(f, r);
        EXPECT_TRUE(m.contains(1.0 / ((1.0 - r) * (1.0 - r)), 1e-12)) << r << " " << m;
    }
}

TEST(Series, ProductMatchesPointwiseProductOfPolynomials)
{
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_polynomial(rng, rng.below(10), 30);
        const auto g = random_polynomial(rng, rng.below(10), 30);
        const auto fg = cauchy_product(f, g);
        const Complex z{rng.uniform(-0.9, 0.9), rng.uniform(-0.4, 0.4)};
        EXPECT_LT(std::abs(fg.evaluate_truncated(z) - naive_value(f, z) * naive_value(g, z)), 1e-12);
        EXPECT_TRUE(fg.tail().is_zero());
    }
}

TEST(Series, CompositionWithHalfIdentity)
{
    const auto w = TruncatedSeries::monomial(1, 0.5, 60);
    const auto f = compose(geometric(60), w);
    for (std::size_t n = 0; n <= 60; ++n) {
        EXPECT_NEAR(f[n].real(), std::pow(0.5, static_cast<double>(n)), 1e-15);
    }
    for (double r : {0.3, 0.9}) {
        EXPECT_TRUE(majorant_sum(f, r).contains(1.0 / (1.0 - 0.5 * r), 1e-12));
    }
}

TEST(Series, CompositionMatchesPointwiseComposition)
{
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_polynomial(rng, 1 + rng.below(5), 40);
        auto wc = random_polynomial(rng, 1 + rng.below(5), 40);
        std::vector<Complex> c(wc.coeffs().begin(), wc.coeffs().end());
        c[0] = 0.0;
        const TruncatedSeries w(c);
        const auto gw = compose(g, w);
        const Complex z{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
        EXPECT_LT(std::abs(gw.evaluate_truncated(z) - naive_value(g, naive_value(w, z))), 1e-12);
    }
}

TEST(Series, CompositionNeedsVanishingInnerConstant)
{
    const auto w = TruncatedSeries::constant(0.1, 10) + TruncatedSeries::identity(10);
    EXPECT_THROW(compose(geometric(10), w), NonVanishingInnerConstant);
    EXPECT_THROW(inner_powers(w, 3), NonVanishingInnerConstant);
}

TEST(Series, InnerPowers)
{
    // w = z + z^2, w^2 = z^2 + 2 z^3 + z^4.
    const TruncatedSeries w(std::vector<Complex>{0.0, 1.0, 1.0, 0.0, 0.0, 0.0});
    const auto rows = inner_powers(w, 2);
    EXPECT_EQ(rows[0][0], Complex(1.0));
    EXPECT_EQ(rows[2][2], Complex(1.0));
    EXPECT_EQ(rows[2][3], Complex(2.0));
    EXPECT_EQ(rows[2][4], Complex(1.0));
    EXPECT_EQ(rows[2][5], Complex(0.0));
}

TEST(Series, TruncationKeepsAValidEnclosure)
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto full = random_blaschke(1 + seed % 6, seed, 200);
        const auto cut = full.truncated(15);
        for (double r : {0.2, 0.5, 0.8}) {
            const double exact_enough = majorant_sum(full, r).lo;
            const auto m = majorant_sum(cut, r);
            EXPECT_LE(m.lo, exact_enough + 1e-12);
            EXPECT_GE(m.hi, exact_enough - 1e-12);
        }
    }
}

TEST(Series, PaddingOnlyForPolynomials)
{
    const auto p = TruncatedSeries::identity(3).padded(10);
    EXPECT_EQ(p.order(), 10u);
    EXPECT_EQ(p[1], Complex(1.0));
    EXPECT_THROW(geometric(3).padded(10), ParamOutOfRange);
}

TEST(Series, CapTightensTheTail)
{
    const auto f = geometric(10);
    const auto capped = f.with_cap(0.25);
    EXPECT_LT(capped.tail().sum(0.5), f.tail().sum(0.5));
    EXPECT_NEAR(capped.tail().sum(0.5), 0.25 * std::pow(0.5, 11) / 0.5, 1e-15);
    EXPECT_THROW(f.with_cap(-1.0), ParamOutOfRange);
}

TEST(Series, DerivativeAndAntiderivative)
{
    const auto d = derivative(geometric(40));
    for (std::size_t n = 0; n < 40; ++n) {
        EXPECT_DOUBLE_EQ(d[n].real(), static_cast<double>(n + 1));
    }
    EXPECT_TRUE(majorant_sum(d, 0.5).contains(4.0, 1e-12));

    // -log(1 - z) = sum z^n / n.
    const auto l = antiderivative(geometric(40));
    EXPECT_EQ(l[0], Complex(0.0));
    EXPECT_DOUBLE_EQ(l[7].real(), 1.0 / 7.0);
    EXPECT_TRUE(majorant_sum(l, 0.6).contains(-std::log(0.4), 1e-12));

    const auto back = derivative(antiderivative(geometric(40)));
    for (std::size_t n = 0; n <= 40; ++n) {
        EXPECT_NEAR(back[n].real(), 1.0, 1e-15);
    }
}

TEST(Series, WeightedNorm)
{
    // sum_{n>=1} r^(2n) = r^2 / (1 - r^2).
    for (double r : {0.3, 0.7}) {
        EXPECT_TRUE(weighted_norm_sq(geometric(30), r).contains(r * r / (1.0 - r * r), 1e-12));
    }
}

TEST(Series, RadiusMustBeBelowOne)
{
    EXPECT_THROW(majorant_sum(geometric(5), 1.0), RadiusOutOfRange);
    EXPECT_THROW(weighted_norm_sq(geometric(5), -0.1), RadiusOutOfRange);
}

TEST(Series, ZeroOrder)
{
    EXPECT_EQ(TruncatedSeries::monomial(3, 2.0, 8).zero_order(), 3u);
    EXPECT_THROW(TruncatedSeries::constant(1.0, 8).zero_order(), DegenerateOrder);
}

TEST(Series, LinearOperations)
{
    const auto f = geometric(5) + Complex(2.0) * TruncatedSeries::identity(8);
    EXPECT_EQ(f.order(), 5u);
    EXPECT_EQ(f[1], Complex(3.0));
    const auto g = f - geometric(5);
    EXPECT_EQ(g[0], Complex(0.0));
    EXPECT_EQ(g[1], Complex(2.0));
    const auto s = shift_up(TruncatedSeries::identity(3), 2);
    EXPECT_EQ(s.order(), 5u);
    EXPECT_EQ(s[3], Complex(1.0));
}

TEST(SeriesJson, RoundTrip)
{
    const auto f = random_blaschke(3, 5, 30);
    const auto back = series_from_json(to_json(f));
    ASSERT_EQ(back.order(), f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        EXPECT_EQ(back[n], f[n]);
    }
    EXPECT_DOUBLE_EQ(back.tail_cap(), f.tail_cap());
}

TEST(SeriesJson, UnboundedTailIsNull)
{
    const TruncatedSeries f(std::vector<Complex>{1.0, 2.0}, std::numeric_limits<double>::infinity());
    const auto j = to_json(f);
    EXPECT_TRUE(j.at("tail_cap").is_null());
    EXPECT_TRUE(std::isinf(series_from_json(j).tail_cap()));
}

TEST(SeriesJson, RejectsMalformed)
{
    EXPECT_THROW(series_from_json(nlohmann::json::object()), SeriesFormatError);
    EXPECT_THROW(series_from_json({{"coeffs_re", {1.0, 2.0}}, {"coeffs_im", {0.0}}, {"tail_cap", 0.0}}),
                 SeriesFormatError);
    EXPECT_THROW(series_from_json({{"coeffs_re", {1.0}}, {"coeffs_im", {0.0}}, {"tail_cap", -1.0}}),
                 SeriesFormatError);
}

} // namespace
} // namespace bohr
