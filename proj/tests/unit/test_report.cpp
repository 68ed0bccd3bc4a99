#include <gtest/gtest.h>

#include "bohrlab/errors.hpp"
#include "bohrlab/report.hpp"

namespace bohr {
namespace {

TEST(Report, CompareIsThreeValued)
{
    EXPECT_EQ(compare({0.1, 0.2}, {0.3, 0.4}), Verdict::Holds);
    EXPECT_EQ(compare({0.5, 0.6}, {0.3, 0.4}), Verdict::Fails);
    EXPECT_EQ(compare({0.1, 0.35}, {0.3, 0.4}), Verdict::Inconclusive);
    // Exact equality counts as holding.
    EXPECT_EQ(compare(Interval::point(1.0), Interval::point(1.0)), Verdict::Holds);
    EXPECT_EQ(compare(Interval::point(1.0 + 1e-13), Interval::point(1.0)), Verdict::Holds);
    EXPECT_EQ(compare(Interval::point(1.0 + 1e-9), Interval::point(1.0)), Verdict::Fails);
}

TEST(Report, ScanFindsAStep)
{
    const double edge = 0.3141592653589793;
    const auto b = scan_crossover([&](double r) { return r <= edge ? Verdict::Holds : Verdict::Fails; }, 0.0, 1.0);
    EXPECT_FALSE(b.inconclusive);
    EXPECT_LE(b.holds, edge);
    EXPECT_GT(b.fails, edge);
    EXPECT_LT(b.width(), 1e-15);
}

TEST(Report, ScanReportsAnInconclusiveZone)
{
    const auto b = scan_crossover(
        [](double r) {
            if (r < 0.4) return Verdict::Holds;
            if (r > 0.5) return Verdict::Fails;
            return Verdict::Inconclusive;
        },
        0.0, 1.0);
    EXPECT_TRUE(b.inconclusive);
    EXPECT_NEAR(b.holds, 0.4, 1e-12);
    EXPECT_NEAR(b.fails, 0.5, 1e-12);
}

TEST(Report, ScanNeedsAStraddlingBracket)
{
    const auto always = [](double) { return Verdict::Holds; };
    EXPECT_THROW(scan_crossover(always, 0.0, 1.0), BadBracket);
}

TEST(Report, JsonCarriesEveryField)
{
    VerificationReport r;
    r.check = "demo";
    r.params = {1.0, 0.5, 2, 0.25};
    r.predicted_radius = 0.3;
    r.radius = 0.3 - 1e-9;
    r.lhs = {0.9, 0.95};
    r.rhs = Interval::point(1.0);
    r.verdict = Verdict::Holds;
    r.side_condition = SideCondition::RemovedByP;
    r.notes.push_back("n");
    EXPECT_NEAR(r.margin(), 0.05, 1e-15);

    const auto j = to_json(r);
    EXPECT_EQ(j.at("check"), "demo");
    EXPECT_EQ(j.at("verdict"), "HOLDS");
    EXPECT_EQ(j.at("params").at("m"), 2);
    EXPECT_TRUE(j.at("crossover_bracket").is_null());
    EXPECT_EQ(j.at("notes").size(), 1u);
    EXPECT_EQ(j.at("side_condition"), std::string(to_string(SideCondition::RemovedByP)));

    r.crossover = Bracket{0.29, 0.31, false};
    EXPECT_FALSE(to_json(r).at("crossover_bracket").is_null());
}

} // namespace
} // namespace bohr
