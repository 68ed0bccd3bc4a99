#pragma once

#include <functional>

namespace bohr {

// Scalar parameters of the harmonic radius formulas: exponent p on |h(0)|,
// dilatation bound k, power m in h(z^m) and a = |h(0)|.
struct RadiusParams {
    double p = 1.0;
    double k = 0.0;
    int m = 1;
    double a = 0.0;
};

// Bisection always runs this many halvings (2^-60 is far below 1e-12).
inline constexpr int kBisectionSteps = 60;

// Root of a function that changes sign on [lo, hi]. Throws BadBracket when
// the endpoint values do not straddle zero. Returns the midpoint of the final
// bracket.
double bisect_root(const std::function<double(double)>& f, double lo, double hi);

// (1 - x^2) / (1 - x^p) on [0, 1], with the limit 2/p at x = 1.
double power_ratio(double p, double x);

// Unique root in (0, 1) of 1 - x - x^p.
double branch_point(double p);

// Radius up to which |a_0|^p + sum_{n>=1} |a_n| r^n <= 1 for every member of
// the unit ball with |a_0| = x. Three branches split at branch_point(p); the
// value at x = 1 is p/(2+p).
double head_radius(double p, double x);

// head_radius for p = 1: sqrt((1-x)/2) on [0, 1/2), 1/(1+2x) on [1/2, 1].
double classical_radius(double x);

// The polynomial-type function whose root in (0, 1) is harmonic_radius():
//   {[(1+k)(1-a^2) + 1] r - 1} (1 + a r^m)^p + (1 - r)(r^m + a)^p.
double radius_polynomial(const RadiusParams& params, double r);

// radius_polynomial divided by (1 + a r^m)^p (1 - r):
//   ((r^m + a)/(1 + a r^m))^p + (1+k)(1-a^2) r/(1-r) - 1,
// strictly increasing in r on [0, 1).
double normalized_gap(const RadiusParams& params, double r);

// 2(1+k) r (1 + r^m) - p (1 - r)(1 - r^m), the a -> 1 limit of the gap.
double uniform_radius_polynomial(const RadiusParams& params, double r);

// Root of radius_polynomial in (0, 1); needs a in [0, 1), any p > 0.
double harmonic_radius(const RadiusParams& params);

// Root of uniform_radius_polynomial in (0, 1); needs p in (0, 2].
double uniform_harmonic_radius(const RadiusParams& params);

// p / (2(1+k) + p), the upper bound for uniform_harmonic_radius.
double uniform_harmonic_radius_bound(double p, double k);

// (1 - a^p) / (1 - a^p + (1+k)(1-a^2)), the m -> infinity radius; 1/(2+k) at a = 0.
double limit_harmonic_radius(const RadiusParams& params);

// inf over a in [0, 1) of limit_harmonic_radius: p/(2(1+k)+p) for p <= 2 and
// 1/(2+k) for p > 2.
double limit_harmonic_radius_infimum(double p, double k);

// 1 / ((1+k)(1+a) + 1), an upper bound for harmonic_radius at p = 1.
double harmonic_radius_cap(double a, double k);

// Roots 1/(2a +- sqrt(2a^2 - 1)) of the quadratic factor of the limiting
// majorant of the subordinate square, for a in [1/sqrt(2), 1]. plus <= minus.
struct CrossoverRoots {
    double plus;
    double minus;
};
CrossoverRoots crossover_roots(double a);

} // namespace bohr
