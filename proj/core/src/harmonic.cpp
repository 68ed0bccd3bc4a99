#include "bohrlab/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohr {

namespace {

void require_radius(double r)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw RadiusOutOfRange("radius must lie in [0, 1), got " + std::to_string(r));
    }
}

void require_dilatation(double k)
{
    if (!(k >= 0.0 && k <= 1.0)) {
        throw ParamOutOfRange("dilatation bound k must lie in [0, 1], got " + std::to_string(k));
    }
}

// Exponents beyond 2 are only covered for k in {0, 1}.
void require_harmonic_exponent(double p, double k)
{
    if (!(p > 0.0 && std::isfinite(p))) {
        throw ParamOutOfRange("exponent p must be positive");
    }
    if (p > 2.0 && k != 0.0 && k != 1.0) {
        throw ParamOutOfRange("p > 2 is only supported for k = 0 or k = 1");
    }
}

std::string format_double(double x)
{
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// Adopts |h(0)| and the pair's k, noting any disagreement with the caller's values.
RadiusParams align_params(RadiusParams params, const HarmonicPair& f, std::vector<std::string>& notes)
{
    const double a = std::min(1.0, std::abs(f.h[0]));
    if (std::abs(params.a - a) > kZeroTolerance) {
        notes.push_back("a replaced by |h(0)| = " + format_double(a));
    }
    if (params.k != f.k) {
        notes.push_back("k replaced by the pair's dilatation bound " + format_double(f.k));
    }
    params.a = a;
    params.k = f.k;
    return params;
}

void note_validity(const HarmonicPair& f, double r, VerificationReport& rep)
{
    const double validity = coanalytic_validity_radius(f);
    if (r > validity) {
        rep.notes.push_back("radius exceeds the co-analytic validity radius " + format_double(validity));
    }
}

Interval head_plus_majorant(const HarmonicPair& f, double p, double r)
{
    return Interval::point(std::pow(std::abs(f.h[0]), p)) + refined_majorant(f, r);
}

} // namespace

double norm_weight(double k)
{
    require_dilatation(k);
    return k == 0.0 ? 0.0 : 1.0 / k;
}

Interval refined_majorant(const HarmonicPair& f, double k, double r)
{
    require_radius(r);
    const double c = norm_weight(k);
    const double a0 = std::abs(f.h[0]);
    const double factor = (1.0 + a0 * r) / ((1.0 + a0) * (1.0 - r));
    const Interval norms = weighted_norm_sq(f.h, r) + c * weighted_norm_sq(f.g, r);
    return majorant_sum(f.h, r, 1) + majorant_sum(f.g, r, 1) + factor * norms;
}

double refined_majorant_bound(double a0, double k, double r)
{
    require_radius(r);
    require_dilatation(k);
    return (1.0 - a0 * a0) * (1.0 + k) * r / (1.0 - r);
}

double coanalytic_validity_radius(const HarmonicPair& f)
{
    if (f.k == 0.0) {
        return 1.0;
    }
    const double aq = std::abs(f.leading_analytic());
    const double bq = std::abs(f.leading_coanalytic());
    const double ratio = bq / (f.k * aq);
    if (ratio > 1.0 + 1e-9) {
        throw PreconditionViolated("|b_q| > k |a_q|: the pair violates the dilatation bound at the origin");
    }
    return classical_radius(std::min(1.0, ratio));
}

VerificationReport check_refined_majorant_bound(const HarmonicPair& f, double r)
{
    require_radius(r);
    const double validity = coanalytic_validity_radius(f);
    if (r > validity) {
        throw PreconditionViolated("radius " + format_double(r) + " exceeds the validity radius " +
                                   format_double(validity));
    }
    VerificationReport rep;
    rep.check = "refined_majorant_bound";
    rep.params.k = f.k;
    rep.params.a = std::abs(f.h[0]);
    rep.predicted_radius = validity;
    rep.radius = r;
    rep.lhs = refined_majorant(f, r);
    rep.rhs = Interval::point(refined_majorant_bound(rep.params.a, f.k, r));
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

VerificationReport check_coanalytic_majorant(const HarmonicPair& f, double r)
{
    require_radius(r);
    const std::size_t q = f.zero_order();
    const double validity = coanalytic_validity_radius(f);
    if (r > validity) {
        throw PreconditionViolated("radius " + format_double(r) + " exceeds the validity radius " +
                                   format_double(validity));
    }
    VerificationReport rep;
    rep.check = "coanalytic_majorant";
    rep.params.k = f.k;
    rep.params.a = std::abs(f.h[0]);
    rep.predicted_radius = validity;
    rep.radius = r;
    rep.lhs = majorant_sum(f.g, r, q);
    rep.rhs = f.k * majorant_sum(f.h, r, q);
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

VerificationReport check_coanalytic_norm(const HarmonicPair& f, double r)
{
    require_radius(r);
    VerificationReport rep;
    rep.check = "coanalytic_norm";
    rep.params.k = f.k;
    rep.params.a = std::abs(f.h[0]);
    rep.predicted_radius = 1.0;
    rep.radius = r;
    rep.lhs = weighted_norm_sq(f.g, r);
    rep.rhs = (f.k * f.k) * weighted_norm_sq(f.h, r);
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

double schwarz_pick_head(const RadiusParams& params, double r)
{
    require_radius(r);
    const double rm = std::pow(r, params.m);
    return std::pow((rm + params.a) / (1.0 + params.a * rm), params.p);
}

double schwarz_pick_majorant(const RadiusParams& params, double r)
{
    return schwarz_pick_head(params, r) + refined_majorant_bound(params.a, params.k, r);
}

Interval schwarz_pick_majorant(const RadiusParams& params, const HarmonicPair& f, double r)
{
    return Interval::point(schwarz_pick_head(params, r)) + refined_majorant(f, params.k, r);
}

Interval head_functional(const HarmonicPair& f, double p, int m, Complex z)
{
    const double r = std::abs(z);
    require_radius(r);
    const Interval head = pow_nonneg(f.h.modulus_at(std::pow(z, m)), p);
    return head + refined_majorant(f, r);
}

double extremal_gap(const RadiusParams& params, double r)
{
    require_radius(r);
    const auto [p, k, m, a] = params;
    if (!(a >= 0.0 && a < 1.0)) {
        throw ParamOutOfRange("extremal_gap needs a in [0, 1)");
    }
    const double rm = std::pow(r, m);
    const double denom = 1.0 + a * rm;
    // 1 - X = (1 - a)(1 - r^m)/(1 + a r^m), so (1 - X^p)/(1 - a) stays accurate as a -> 1.
    const double one_minus_x = (1.0 - a) * (1.0 - rm) / denom;
    const double power_gap = -std::expm1(p * std::log1p(-one_minus_x));
    const double scaled_gap = a == 0.0 ? power_gap : power_gap / (1.0 - a);
    return (1.0 - r) * std::pow(denom, p) * ((1.0 + a) * (1.0 + k) * r / (1.0 - r) - scaled_gap);
}

double extremal_gap_limit(const RadiusParams& params, double r)
{
    require_radius(r);
    const auto [p, k, m, a] = params;
    const double rm = std::pow(r, m);
    return (1.0 - r) * std::pow(1.0 + rm, p) * (2.0 * (1.0 + k) * r / (1.0 - r) - p * (1.0 - rm) / (1.0 + rm));
}

double extremal_identity_residual(const RadiusParams& params, double r, std::size_t order)
{
    const auto [p, k, m, a] = params;
    const auto pair = extremal_harmonic(a, k, order);
    const Interval direct = head_functional(pair, p, m, r);
    const double rm = std::pow(r, m);
    const double identity =
        1.0 + (1.0 - a) * extremal_gap(params, r) / (std::pow(1.0 + a * rm, p) * (1.0 - r));
    return std::max(std::abs(direct.lo - identity), std::abs(direct.hi - identity));
}

SideCondition side_condition(const HarmonicPair& f, double p, double predicted_radius, bool p_escape)
{
    if (f.k == 0.0) {
        return SideCondition::Holds;
    }
    const double aq = std::abs(f.leading_analytic());
    const double bq = std::abs(f.leading_coanalytic());
    if (2.0 * f.k * aq * bq <= 1.0) {
        return SideCondition::Holds;
    }
    if (f.k == 1.0) {
        return SideCondition::RemovedByK;
    }
    if (p_escape && p <= 1.0) {
        return SideCondition::RemovedByP;
    }
    if (predicted_radius <= 1.0 / 3.0) {
        return SideCondition::RemovedByRadius;
    }
    return SideCondition::Unmet;
}

Bracket extremal_crossover(const RadiusParams& params, double r_lo, double r_hi, std::size_t order)
{
    const auto pair = extremal_harmonic(params.a, params.k, order);
    const Interval one = Interval::point(1.0);
    return scan_crossover(
        [&](double r) { return compare(head_functional(pair, params.p, params.m, r), one); }, r_lo, r_hi);
}

namespace {

// Marks the report FAILS when the extremal crossover misses the predicted radius.
void attach_crossover(VerificationReport& rep, const Bracket& b, bool must_match)
{
    rep.crossover = b;
    const double miss = std::abs(b.mid() - rep.predicted_radius);
    if (must_match && miss > 1e-7) {
        rep.notes.push_back("extremal crossover " + format_double(b.mid()) + " differs from the predicted radius");
        rep.verdict = Verdict::Fails;
    }
}

} // namespace

VerificationReport verify_harmonic_radius(RadiusParams params, const HarmonicPair& f, double backoff)
{
    VerificationReport rep;
    rep.check = "harmonic_radius";
    params = align_params(params, f, rep.notes);
    require_harmonic_exponent(params.p, params.k);
    rep.params = params;
    rep.predicted_radius = harmonic_radius(params);
    rep.radius = std::max(0.0, rep.predicted_radius - backoff);
    rep.side_condition = side_condition(f, params.p, rep.predicted_radius, false);
    note_validity(f, rep.radius, rep);
    rep.lhs = schwarz_pick_majorant(params, f, rep.radius);
    rep.rhs = Interval::point(1.0);
    rep.verdict = compare(rep.lhs, rep.rhs);
    const double hi = rep.predicted_radius + 0.5 * (1.0 - rep.predicted_radius);
    attach_crossover(rep, extremal_crossover(params, 0.0, hi), true);
    return rep;
}

VerificationReport verify_harmonic_corollary(HarmonicCorollary which, RadiusParams params, const HarmonicPair& f,
                                             double backoff)
{
    VerificationReport rep;
    params = align_params(params, f, rep.notes);
    require_harmonic_exponent(params.p, params.k);
    rep.params = params;
    const Interval one = Interval::point(1.0);

    switch (which) {
    case HarmonicCorollary::Uniform: {
        if (params.p > 2.0) {
            throw ParamOutOfRange("the uniform radius needs p in (0, 2]");
        }
        rep.check = "uniform_harmonic_radius";
        rep.predicted_radius = uniform_harmonic_radius(params);
        rep.radius = std::max(0.0, rep.predicted_radius - backoff);
        rep.lhs = schwarz_pick_majorant(params, f, rep.radius);
        // Sharp only in the limit a -> 1, where the extremal gap tends to a
        // closed form whose sign change is the predicted radius.
        const auto b = scan_crossover(
            [&](double r) { return compare(Interval::point(extremal_gap_limit(params, r)), Interval::point(0.0)); },
            0.0, 0.5 * (1.0 + rep.predicted_radius));
        rep.rhs = one;
        rep.verdict = compare(rep.lhs, rep.rhs);
        attach_crossover(rep, b, true);
        break;
    }
    case HarmonicCorollary::Limit:
    case HarmonicCorollary::Infimum: {
        const bool limit = which == HarmonicCorollary::Limit;
        rep.check = limit ? "limit_harmonic_radius" : "infimum_harmonic_radius";
        rep.predicted_radius = limit ? limit_harmonic_radius(params)
                                     : limit_harmonic_radius_infimum(params.p, params.k);
        rep.radius = std::max(0.0, rep.predicted_radius - backoff);
        rep.lhs = head_plus_majorant(f, params.p, rep.radius);
        rep.rhs = one;
        rep.verdict = compare(rep.lhs, rep.rhs);
        const auto extremal = extremal_harmonic(params.a, params.k, f.h.order());
        const double hi = rep.predicted_radius + 0.5 * (1.0 - rep.predicted_radius);
        const auto b = scan_crossover(
            [&](double r) { return compare(head_plus_majorant(extremal, params.p, r), one); }, 0.0,
            std::max(hi, limit_harmonic_radius(params) + 0.5 * (1.0 - limit_harmonic_radius(params))));
        if (limit) {
            attach_crossover(rep, b, true);
        } else {
            // For a fixed a the extremal pair crosses at the a-dependent radius,
            // which may not undercut the infimum.
            rep.crossover = b;
            if (b.fails < rep.predicted_radius - 1e-7) {
                rep.notes.push_back("extremal crossover lies below the infimum radius");
                rep.verdict = Verdict::Fails;
            }
        }
        break;
    }
    }
    rep.side_condition = side_condition(f, params.p, rep.predicted_radius, true);
    note_validity(f, rep.radius, rep);
    return rep;
}

} // namespace bohr
