#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bohrlab/interval.hpp"
#include "bohrlab/radii.hpp"

namespace bohr {

enum class Verdict { Holds, Fails, Inconclusive };

std::string_view to_string(Verdict v);

// Slack applied to both comparisons so that exact equalities (an extremal
// function at its own radius) come out as HOLDS rather than INCONCLUSIVE.
inline constexpr double kVerdictTolerance = 1e-12;

// HOLDS when lhs <= rhs is certain, FAILS when lhs > rhs is certain.
Verdict compare(const Interval& lhs, const Interval& rhs, double tolerance = kVerdictTolerance);

// Result of a crossover scan. `holds` is the largest radius seen with verdict
// HOLDS, `fails` the smallest with FAILS. When an INCONCLUSIVE zone separates
// them the bracket cannot shrink below it and `inconclusive` is set.
struct Bracket {
    double holds = 0.0;
    double fails = 0.0;
    bool inconclusive = false;

    double mid() const { return 0.5 * (holds + fails); }
    double width() const { return fails - holds; }
};

// Locates the radius where `verdict_at` switches from HOLDS to FAILS.
// Requires HOLDS at r_lo and FAILS at r_hi, otherwise throws BadBracket.
Bracket scan_crossover(const std::function<Verdict(double)>& verdict_at, double r_lo, double r_hi);

// How the hypothesis |b_q| <= 1/(2k|a_q|) of the harmonic radius theorems was
// settled.
enum class SideCondition {
    NotApplicable,
    Holds,
    RemovedByK,       // k = 0 or k = 1
    RemovedByP,       // p in (0, 1]
    RemovedByRadius,  // predicted radius <= 1/3
    Unmet,
};

std::string_view to_string(SideCondition s);

struct VerificationReport {
    std::string check;
    RadiusParams params;
    double predicted_radius = 0.0;
    // Radius at which lhs and rhs were evaluated.
    double radius = 0.0;
    Interval lhs;
    Interval rhs;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Bracket> crossover;
    SideCondition side_condition = SideCondition::NotApplicable;
    std::vector<std::string> notes;

    // Certified slack rhs.lo - lhs.hi (negative when not certainly holding).
    double margin() const { return rhs.lo - lhs.hi; }
};

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const RadiusParams& params);

} // namespace bohr
