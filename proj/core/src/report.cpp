#include "bohrlab/report.hpp"

#include "bohrlab/errors.hpp"

namespace bohr {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds:
        return "HOLDS";
    case Verdict::Fails:
        return "FAILS";
    case Verdict::Inconclusive:
        break;
    }
    return "INCONCLUSIVE";
}

std::string_view to_string(SideCondition s)
{
    switch (s) {
    case SideCondition::NotApplicable:
        return "not_applicable";
    case SideCondition::Holds:
        return "holds";
    case SideCondition::RemovedByK:
        return "removed_by_k";
    case SideCondition::RemovedByP:
        return "removed_by_p";
    case SideCondition::RemovedByRadius:
        return "removed_by_radius";
    case SideCondition::Unmet:
        break;
    }
    return "unmet";
}

Verdict compare(const Interval& lhs, const Interval& rhs, double tolerance)
{
    if (lhs.hi <= rhs.lo + tolerance) {
        return Verdict::Holds;
    }
    if (lhs.lo > rhs.hi + tolerance) {
        return Verdict::Fails;
    }
    return Verdict::Inconclusive;
}

namespace {

// Bisection on a predicate that is false at lo and true at hi; returns the
// final [lo, hi].
std::pair<double, double> bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi)
{
    for (int i = 0; i < kBisectionSteps && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        (pred(mid) ? hi : lo) = mid;
    }
    return {lo, hi};
}

} // namespace

Bracket scan_crossover(const std::function<Verdict(double)>& verdict_at, double r_lo, double r_hi)
{
    if (!(r_lo < r_hi)) {
        throw BadBracket("scan needs r_lo < r_hi");
    }
    if (verdict_at(r_lo) != Verdict::Holds || verdict_at(r_hi) != Verdict::Fails) {
        throw BadBracket("scan needs HOLDS at r_lo and FAILS at r_hi");
    }
    double lo = r_lo;
    double hi = r_hi;
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const Verdict v = verdict_at(mid);
        if (v == Verdict::Holds) {
            lo = mid;
        } else if (v == Verdict::Fails) {
            hi = mid;
        } else {
            // Shrink from both sides towards the INCONCLUSIVE zone.
            const auto left =
                bisect_predicate([&](double r) { return verdict_at(r) != Verdict::Holds; }, lo, mid);
            const auto right =
                bisect_predicate([&](double r) { return verdict_at(r) == Verdict::Fails; }, mid, hi);
            return {left.first, right.second, true};
        }
    }
    return {lo, hi, false};
}

nlohmann::json to_json(const RadiusParams& params)
{
    return {{"p", params.p}, {"k", params.k}, {"m", params.m}, {"a", params.a}};
}

nlohmann::json to_json(const VerificationReport& report)
{
    nlohmann::json j;
    j["check"] = report.check;
    j["params"] = to_json(report.params);
    j["predicted_radius"] = report.predicted_radius;
    j["radius"] = report.radius;
    j["verdict"] = std::string(to_string(report.verdict));
    j["lhs"] = {report.lhs.lo, report.lhs.hi};
    j["rhs"] = {report.rhs.lo, report.rhs.hi};
    if (report.crossover) {
        j["crossover_bracket"] = {report.crossover->holds, report.crossover->fails};
        j["crossover_inconclusive"] = report.crossover->inconclusive;
    } else {
        j["crossover_bracket"] = nullptr;
    }
    j["side_condition"] = std::string(to_string(report.side_condition));
    j["notes"] = report.notes;
    return j;
}

} // namespace bohr
