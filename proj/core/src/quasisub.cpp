#include "bohrlab/quasisub.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohrlab/errors.hpp"
#include "bohrlab/families.hpp"

namespace bohr {

namespace {

void require_radius(double r)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw RadiusOutOfRange("radius must lie in [0, 1), got " + std::to_string(r));
    }
}

void require_square_parameter(double a)
{
    if (!(a > 0.0 && a < 1.0)) {
        throw ParamOutOfRange("square majorant needs a in (0, 1), got " + std::to_string(a));
    }
}

} // namespace

TruncatedSeries quasi_compose(const TruncatedSeries& phi, const TruncatedSeries& g, const TruncatedSeries& w)
{
    return cauchy_product(phi, compose(g, w));
}

double quasi_subordination_radius(double phi0, double wprime0)
{
    return std::min(classical_radius(phi0), classical_radius(wprime0));
}

VerificationReport majorant_compare(const TruncatedSeries& f, const TruncatedSeries& g, double r)
{
    require_radius(r);
    VerificationReport rep;
    rep.check = "majorant_compare";
    rep.predicted_radius = r;
    rep.radius = r;
    rep.lhs = majorant_sum(f, r);
    rep.rhs = majorant_sum(g, r);
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

Interval bohr_head_sum(const TruncatedSeries& f, double p, double r)
{
    if (!(p > 0.0)) {
        throw ParamOutOfRange("exponent p must be positive");
    }
    require_radius(r);
    const double head = std::pow(std::abs(f[0]), p);
    return Interval::point(head) + majorant_sum(f, r, 1);
}

VerificationReport head_sum_check(const TruncatedSeries& f, double p, double r)
{
    VerificationReport rep;
    rep.check = "head_sum";
    rep.params.p = p;
    rep.params.a = std::abs(f[0]);
    rep.predicted_radius = r;
    rep.radius = r;
    rep.lhs = bohr_head_sum(f, p, r);
    rep.rhs = Interval::point(1.0);
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

VerificationReport verify_quasi_subordination(const TruncatedSeries& phi, const TruncatedSeries& g,
                                              const TruncatedSeries& w, double backoff)
{
    const double phi0 = std::min(1.0, std::abs(phi[0]));
    const double wprime0 = std::min(1.0, std::abs(w.coefficient_or_zero(1)));
    const double radius = quasi_subordination_radius(phi0, wprime0);
    const double r = std::max(0.0, radius - backoff);
    auto rep = majorant_compare(quasi_compose(phi, g, w), g, r);
    rep.check = "quasi_subordination";
    rep.predicted_radius = radius;
    rep.notes.push_back("|Phi(0)| = " + std::to_string(phi0) + ", |w'(0)| = " + std::to_string(wprime0));
    return rep;
}

VerificationReport verify_head_radius(const TruncatedSeries& f, double p, double backoff)
{
    const double a0 = std::min(1.0, std::abs(f[0]));
    const double radius = head_radius(p, a0);
    auto rep = head_sum_check(f, p, std::max(0.0, radius - backoff));
    rep.check = "head_radius";
    rep.predicted_radius = radius;
    if (a0 > 0.0 && a0 < branch_point(p)) {
        rep.notes.push_back("|a_0| below the branch point: radius is not claimed sharp");
    }
    return rep;
}

Bracket majorant_crossover(const TruncatedSeries& f, const TruncatedSeries& g, double r_lo, double r_hi)
{
    return scan_crossover([&](double r) { return majorant_compare(f, g, r).verdict; }, r_lo, r_hi);
}

Bracket head_sum_crossover(const TruncatedSeries& f, double p, double r_lo, double r_hi)
{
    return scan_crossover([&](double r) { return head_sum_check(f, p, r).verdict; }, r_lo, r_hi);
}

double square_majorant(double a, double r)
{
    require_square_parameter(a);
    require_radius(r);
    const std::size_t n = subordinate_square_sign_index(a);
    const double mobius = (r - a) / (1.0 - a * r);
    double negative_part = 0.0;
    double power = r;
    for (std::size_t j = 1; j <= n; ++j) {
        negative_part += subordinate_square_coefficient(a, j) * power;
        power *= r;
    }
    return mobius * mobius - 2.0 * negative_part;
}

double square_majorant_partial(double a, double r, std::size_t terms)
{
    require_square_parameter(a);
    require_radius(r);
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t j = 0; j <= terms; ++j) {
        sum += std::abs(subordinate_square_coefficient(a, j)) * power;
        power *= r;
    }
    return sum;
}

double square_majorant_limit(double a, double r)
{
    require_radius(r);
    if (!(a < 1.0)) {
        throw ParamOutOfRange("square_majorant_limit needs a < 1");
    }
    const auto roots = crossover_roots(a);
    const double d = 1.0 - a * r;
    return 1.0 - (1.0 - a * a) * (1.0 + 2.0 * a * a) * (r - roots.plus) * (r - roots.minus) / (d * d);
}

} // namespace bohr
