#pragma once

#include "bohrlab/families.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/report.hpp"

namespace bohr {

// Weight of ||g||_r^2 in the refined majorant: 0 at k = 0, 1/k otherwise.
double norm_weight(double k);

// Refined majorant of f = h + conj(g):
//   sum_{n>=1} |a_n| r^n + sum_{n>=1} |b_n| r^n
//     + (1 + |a_0| r) / ((1 + |a_0|)(1 - r)) (||h - h(0)||_r^2 + norm_weight(k) ||g||_r^2).
Interval refined_majorant(const HarmonicPair& f, double k, double r);
inline Interval refined_majorant(const HarmonicPair& f, double r) { return refined_majorant(f, f.k, r); }

// (1 - a0^2)(1 + k) r / (1 - r), the bound on refined_majorant for H_k.
double refined_majorant_bound(double a0, double k, double r);

// classical_radius(|b_q| / (k |a_q|)) for k > 0, 1 for k = 0: the radius up
// to which the co-analytic majorant is controlled by the analytic one.
// Throws PreconditionViolated when |b_q| > k |a_q| (the pair is not in H_k).
double coanalytic_validity_radius(const HarmonicPair& f);

// refined_majorant(f, r) <= refined_majorant_bound(|a_0|, k, r). Throws
// PreconditionViolated past coanalytic_validity_radius.
VerificationReport check_refined_majorant_bound(const HarmonicPair& f, double r);

// sum_{n>=q} |b_n| r^n <= k sum_{n>=q} |a_n| r^n, valid up to
// coanalytic_validity_radius (throws PreconditionViolated beyond).
VerificationReport check_coanalytic_majorant(const HarmonicPair& f, double r);

// ||g||_r^2 <= k^2 ||h - h(0)||_r^2 for r < 1.
VerificationReport check_coanalytic_norm(const HarmonicPair& f, double r);

// ((r^m + a)/(1 + a r^m))^p, the Schwarz-Pick bound on |h(z^m)|^p for |z| = r.
double schwarz_pick_head(const RadiusParams& params, double r);

// schwarz_pick_head + refined_majorant_bound with a = params.a. Dominates
// |h(z^m)|^p + refined_majorant(f, k, r) on |z| = r for f in H_k with |h(0)| = a.
double schwarz_pick_majorant(const RadiusParams& params, double r);

// Same majorant but with the refined majorant of the given pair enclosed from
// its series instead of the closed-form bound.
Interval schwarz_pick_majorant(const RadiusParams& params, const HarmonicPair& f, double r);

// |h(z^m)|^p + refined_majorant(f, k, |z|) evaluated directly at z.
Interval head_functional(const HarmonicPair& f, double p, int m, Complex z);

// Gap of the extremal pair, the bracketed factor G with
//   F(r) = 1 + (1 - a) G / ((1 + a r^m)^p (1 - r)),
//   G = (1 - r)(1 + a r^m)^p [(1+a)(1+k) r/(1-r) - (1 - X^p)/(1 - a)],
//   X = (r^m + a)/(1 + a r^m).
double extremal_gap(const RadiusParams& params, double r);
// Its a -> 1 limit (1 - r)(1 + r^m)^p [2(1+k) r/(1-r) - p (1 - r^m)/(1 + r^m)].
double extremal_gap_limit(const RadiusParams& params, double r);

// |F_direct - (1 + (1 - a) G / ((1 + a r^m)^p (1 - r)))| where F_direct is
// head_functional of extremal_harmonic(a, k) at z = r.
double extremal_identity_residual(const RadiusParams& params, double r, std::size_t order = kDefaultOrder);

// How |b_q| <= 1/(2k|a_q|) is settled. `p_escape` enables the p in (0, 1]
// removal that the corollaries allow.
SideCondition side_condition(const HarmonicPair& f, double p, double predicted_radius, bool p_escape);

// Checks |h(z^m)|^p + E_f <= 1 (through its Schwarz-Pick majorant) at
// harmonic_radius(params) - backoff, where a = |h(0)| and k is the pair's
// bound, and scans the crossover of the extremal pair for the same (a, k).
VerificationReport verify_harmonic_radius(RadiusParams params, const HarmonicPair& f, double backoff = 1e-9);

enum class HarmonicCorollary {
    Uniform,   // radius independent of a: root of uniform_radius_polynomial
    Limit,     // m -> infinity: limit_harmonic_radius
    Infimum,   // p / (2(1+k) + p)
};

// Uniform: Schwarz-Pick majorant <= 1 at uniform_harmonic_radius.
// Limit and Infimum: |h(0)|^p + E_f <= 1 at the respective radius.
VerificationReport verify_harmonic_corollary(HarmonicCorollary which, RadiusParams params, const HarmonicPair& f,
                                             double backoff = 1e-9);

// Crossover of head_functional(extremal_harmonic(a, k), p, m, r) against 1.
Bracket extremal_crossover(const RadiusParams& params, double r_lo, double r_hi,
                           std::size_t order = kDefaultOrder);

} // namespace bohr
