#include <gtest/gtest.h>

#include <set>

#include "bohrlab/errors.hpp"
#include "bohrlab/props.hpp"

namespace bohr {
namespace {

TEST(Props, SeedsAreDeterministicAndDistinct)
{
    EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
    std::set<std::uint64_t> seen;
    for (std::uint64_t stream = 0; stream < 10; ++stream) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            seen.insert(derive_seed(42, stream, i));
        }
    }
    EXPECT_EQ(seen.size(), 1000u);
}

TEST(Props, QuasiTripleShape)
{
    const auto t = random_quasi_triple(5, 100);
    EXPECT_TRUE(t.g.tail().is_zero());
    const auto w = t.w_series(100);
    EXPECT_EQ(w.order(), 100u);
    EXPECT_EQ(w[0], Complex(0.0));
    EXPECT_LE(std::abs(w[1]), 1.0 + 1e-12);
}

TEST(Props, EverySuitePassesAtReducedScale)
{
    PropertyConfig config;
    config.scale = 0.1;
    for (auto name : property_suite_names()) {
        for (const auto& r : run_property_suite(name, config)) {
            EXPECT_TRUE(r.passed()) << name << "/" << r.name << ": " << r.detail;
            EXPECT_GT(r.cases, 0u) << name << "/" << r.name;
        }
    }
}

TEST(Props, SuitesAreReproducible)
{
    PropertyConfig config;
    config.scale = 0.05;
    const auto first = run_property_suite("lemmas", config);
    const auto second = run_property_suite("lemmas", config);
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        EXPECT_EQ(first[i].cases, second[i].cases);
        EXPECT_EQ(first[i].worst, second[i].worst);
    }
}

TEST(Props, UnknownSuite)
{
    EXPECT_THROW(run_property_suite("nope"), ParamOutOfRange);
}

} // namespace
} // namespace bohr
