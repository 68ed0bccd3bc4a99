#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "bohrlab/families.hpp"
#include "bohrlab/series.hpp"

namespace bohr {

// Brute-force cross-checks that share no code path with the series engine.
// They validate the engine; they do not certify anything.

using LongComplex = std::complex<long double>;
using Evaluator = std::function<LongComplex(LongComplex)>;

// Number of samples on the extraction circle for coefficients 0..n_max.
std::size_t dft_sample_count(std::size_t n_max);

// Taylor coefficients 0..n_max of a function analytic on |z| <= rho from
// equally spaced samples on |z| = rho:
//   c_n ~ (1/S) sum_j f(rho e^{i t_j}) e^{-i n t_j} / rho^n,  S = dft_sample_count(n_max).
// Each computed c_n is off by the aliased sum_{l>=1} c_{n+lS} rho^{lS}; with
// |c_n| <= coefficient_cap that is at most cap rho^S / (1 - rho^S). The
// returned tail_cap is coefficient_cap plus that aliasing bound.
// Rounding is amplified by rho^-n, so keep rho^-n_max * 1e-19 well below
// the accuracy needed (rho = 0.7 gives ~1e-9 at n = 64).
TruncatedSeries dft_coefficients(const Evaluator& f, double rho, std::size_t n_max, double coefficient_cap = 1.0);

// max |f| over n_points equally spaced points of |z| = r.
double grid_modulus_check(const Evaluator& f, double r, std::size_t n_points);

// Derivative by the four-point complex stencil (1/4h) sum_j i^-j f(z + h i^j),
// exact for polynomials of degree <= 4 and O(h^4) otherwise.
LongComplex stencil_derivative(const Evaluator& f, LongComplex z, long double h = 1e-3L);

struct DilatationSample {
    double max_ratio = 0.0;   // max |g'| / |h'| over the sampled points
    std::size_t sampled = 0;  // points where the ratio was taken
    std::size_t skipped = 0;  // points with |h'| < 1e-14
};

// |g'| / |h'| on n_points of |z| = r, from the stored polynomial parts.
DilatationSample dilatation_check(const HarmonicPair& f, double r, std::size_t n_points);

struct MembershipSample {
    bool member = false;
    double max_ratio = 0.0;
    double max_modulus = 0.0;
    std::size_t skipped = 0;
};

// Heuristic membership test: |h| <= 1 and |g'| <= k |h'| (both with 1e-10
// slack) on 256 points of each circle |z| in {0.3, 0.6, 0.9}. Not certified.
MembershipSample sample_membership(const HarmonicPair& f);

} // namespace bohr
