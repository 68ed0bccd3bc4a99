#pragma once

#include "bohrlab/report.hpp"
#include "bohrlab/series.hpp"

namespace bohr {

// Phi * (g o w). Requires w(0) = 0; |Phi| <= 1 and |w| <= 1 are the caller's
// responsibility.
TruncatedSeries quasi_compose(const TruncatedSeries& phi, const TruncatedSeries& g, const TruncatedSeries& w);

// min(classical_radius(phi0), classical_radius(wprime0)) where phi0 = |Phi(0)|
// and wprime0 = |w'(0)|: up to this radius the majorant of Phi (g o w) stays
// below that of g.
double quasi_subordination_radius(double phi0, double wprime0);

// sum |a_n| r^n <= sum |b_n| r^n for the coefficients of f and g.
VerificationReport majorant_compare(const TruncatedSeries& f, const TruncatedSeries& g, double r);

// Encloses |c_0|^p + sum_{n>=1} |c_n| r^n.
Interval bohr_head_sum(const TruncatedSeries& f, double p, double r);

// bohr_head_sum(f, p, r) <= 1.
VerificationReport head_sum_check(const TruncatedSeries& f, double p, double r);

// Builds f = Phi (g o w), evaluates at quasi_subordination_radius - backoff
// and compares majorants with g.
VerificationReport verify_quasi_subordination(const TruncatedSeries& phi, const TruncatedSeries& g,
                                              const TruncatedSeries& w, double backoff = 1e-9);

// head_sum_check at head_radius(p, |c_0|) - backoff.
VerificationReport verify_head_radius(const TruncatedSeries& f, double p, double backoff = 1e-9);

// Crossover of majorant_compare(f, g, .) and of head_sum_check(f, p, .).
Bracket majorant_crossover(const TruncatedSeries& f, const TruncatedSeries& g, double r_lo, double r_hi);
Bracket head_sum_crossover(const TruncatedSeries& f, double p, double r_lo, double r_hi);

// Majorant sum_j |A_j| r^j of subordinate_square(a) / z^2 in closed form,
// using the sign index N of the coefficients:
//   ((r - a)/(1 - a r))^2 - 2 sum_{j=1}^N A_j r^j.
double square_majorant(double a, double r);
// The same sum cut after `terms` + 1 coefficients.
double square_majorant_partial(double a, double r, std::size_t terms);
// N -> infinity version, defined for a in [1/sqrt(2), 1):
//   1 - (1-a^2)(1+2a^2)(r - plus)(r - minus) / (1 - a r)^2
// with plus/minus from crossover_roots(a). Never exceeds square_majorant.
double square_majorant_limit(double a, double r);

} // namespace bohr
