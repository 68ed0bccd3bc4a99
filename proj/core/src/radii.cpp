#include "bohrlab/radii.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohr {

namespace {

void require_exponent(double p)
{
    if (!(p > 0.0 && std::isfinite(p))) {
        throw ParamOutOfRange("exponent p must be positive and finite, got " + std::to_string(p));
    }
}

void require_unit_closed(double x, const char* what)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw ParamOutOfRange(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

void require_params(const RadiusParams& params)
{
    require_exponent(params.p);
    require_unit_closed(params.k, "k");
    require_unit_closed(params.a, "a");
    if (params.m < 1) {
        throw ParamOutOfRange("m must be a positive integer, got " + std::to_string(params.m));
    }
}

// 1 - x^p without cancellation near x = 1.
double one_minus_power(double x, double p)
{
    if (x == 0.0) {
        return 1.0;
    }
    return -std::expm1(p * std::log(x));
}

} // namespace

double bisect_root(const std::function<double(double)>& f, double lo, double hi)
{
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi)) {
        throw BadBracket("bisection endpoints do not bracket a sign change");
    }
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            return mid;
        }
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double power_ratio(double p, double x)
{
    require_exponent(p);
    require_unit_closed(x, "x");
    if (x == 1.0) {
        return 2.0 / p;
    }
    return (1.0 - x) * (1.0 + x) / one_minus_power(x, p);
}

double branch_point(double p)
{
    require_exponent(p);
    return bisect_root([p](double x) { return 1.0 - x - std::pow(x, p); }, 0.0, 1.0);
}

double head_radius(double p, double x)
{
    require_exponent(p);
    require_unit_closed(x, "x");
    if (x == 1.0) {
        return p / (2.0 + p);
    }
    const double gap = one_minus_power(x, p);
    const double one_minus_sq = (1.0 - x) * (1.0 + x);
    if (x < branch_point(p)) {
        return gap / std::sqrt(one_minus_sq + gap * gap);
    }
    return gap / (one_minus_sq + x * gap);
}

double classical_radius(double x)
{
    require_unit_closed(x, "x");
    if (x < 0.5) {
        return std::sqrt((1.0 - x) / 2.0);
    }
    return 1.0 / (1.0 + 2.0 * x);
}

double radius_polynomial(const RadiusParams& params, double r)
{
    require_params(params);
    require_unit_closed(r, "r");
    const auto [p, k, m, a] = params;
    const double rm = std::pow(r, m);
    return (((1.0 + k) * (1.0 - a * a) + 1.0) * r - 1.0) * std::pow(1.0 + a * rm, p) +
           (1.0 - r) * std::pow(rm + a, p);
}

double normalized_gap(const RadiusParams& params, double r)
{
    require_params(params);
    if (!(r >= 0.0 && r < 1.0)) {
        throw RadiusOutOfRange("normalized_gap needs r in [0, 1), got " + std::to_string(r));
    }
    const auto [p, k, m, a] = params;
    const double rm = std::pow(r, m);
    return std::pow((rm + a) / (1.0 + a * rm), p) + (1.0 + k) * (1.0 - a * a) * r / (1.0 - r) - 1.0;
}

double uniform_radius_polynomial(const RadiusParams& params, double r)
{
    require_params(params);
    require_unit_closed(r, "r");
    const auto [p, k, m, a] = params;
    const double rm = std::pow(r, m);
    return 2.0 * (1.0 + k) * r * (1.0 + rm) - p * (1.0 - r) * (1.0 - rm);
}

double harmonic_radius(const RadiusParams& params)
{
    require_params(params);
    if (params.a >= 1.0) {
        throw ParamOutOfRange("harmonic_radius needs a < 1");
    }
    // The gap is increasing on [0, 1) and blows up at 1, where the polynomial
    // form equals (1+k)(1-a^2)(1+a)^p > 0.
    return bisect_root(
        [&](double r) { return r < 1.0 ? normalized_gap(params, r) : radius_polynomial(params, 1.0); }, 0.0, 1.0);
}

double uniform_harmonic_radius(const RadiusParams& params)
{
    require_params(params);
    if (params.p > 2.0) {
        throw ParamOutOfRange("uniform_harmonic_radius needs p in (0, 2]");
    }
    return bisect_root([&](double r) { return uniform_radius_polynomial(params, r); }, 0.0, 1.0);
}

double uniform_harmonic_radius_bound(double p, double k)
{
    require_exponent(p);
    require_unit_closed(k, "k");
    return p / (2.0 * (1.0 + k) + p);
}

double limit_harmonic_radius(const RadiusParams& params)
{
    require_params(params);
    if (params.a >= 1.0) {
        throw ParamOutOfRange("limit_harmonic_radius needs a < 1");
    }
    const double a = params.a;
    const double gap = one_minus_power(a, params.p);
    return gap / (gap + (1.0 + params.k) * (1.0 - a) * (1.0 + a));
}

double limit_harmonic_radius_infimum(double p, double k)
{
    require_exponent(p);
    require_unit_closed(k, "k");
    return p <= 2.0 ? p / (2.0 * (1.0 + k) + p) : 1.0 / (2.0 + k);
}

double harmonic_radius_cap(double a, double k)
{
    require_unit_closed(a, "a");
    require_unit_closed(k, "k");
    return 1.0 / ((1.0 + k) * (1.0 + a) + 1.0);
}

CrossoverRoots crossover_roots(double a)
{
    double disc = 2.0 * a * a - 1.0;
    if (!(a <= 1.0) || disc < -1e-15) {
        throw ParamOutOfRange("crossover roots need a in [1/sqrt(2), 1], got " + std::to_string(a));
    }
    disc = std::sqrt(std::max(0.0, disc));
    return {1.0 / (2.0 * a + disc), 1.0 / (2.0 * a - disc)};
}

} // namespace bohr
