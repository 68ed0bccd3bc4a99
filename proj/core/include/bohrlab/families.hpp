#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohr {

// Harmonic mapping f = h + conj(g) with |g'| <= k |h'|.
struct HarmonicPair {
    TruncatedSeries h;
    TruncatedSeries g;
    double k = 0.0;

    // Checks g(0) = 0 (to kZeroTolerance) and k in [0, 1]; the dilatation bound
    // itself is only sampled, see dilatation_check().
    HarmonicPair(TruncatedSeries h, TruncatedSeries g, double k);

    // Order q of the zero of h - h(0) at the origin. Throws DegenerateOrder
    // when h is constant through its stored order.
    std::size_t zero_order() const { return h.zero_order(); }
    // a_q and b_q for q = zero_order().
    Complex leading_analytic() const { return h[zero_order()]; }
    Complex leading_coanalytic() const { return g.coefficient_or_zero(zero_order()); }
};

// (z + a) / (1 + a z) for a in [0, 1).
TruncatedSeries disk_automorphism(double a, std::size_t order = kDefaultOrder);

// h = automorphism(a), g = k (h - a). Attains the refined majorant bound.
HarmonicPair extremal_harmonic(double a, double k, std::size_t order = kDefaultOrder);

// z^2 ((z - a) / (1 - a z))^2 for a in (0, 1), built from the closed-form
// coefficients. Subordinate to z^2.
TruncatedSeries subordinate_square(double a, std::size_t order = kDefaultOrder);
// Coefficient A_j of z^(2+j) in subordinate_square(a).
double subordinate_square_coefficient(double a, std::size_t j);
// The N >= 1 with (N-1)/(N+1) <= a^2 < N/(N+2): the coefficients A_1..A_N are
// nonpositive and A_j > 0 beyond. Requires a in (0, 1).
std::size_t subordinate_square_sign_index(double a);

// b z^q (z + a) / (1 + a z), |b| <= 1, a in [0, 1).
TruncatedSeries monomial_times_automorphism(std::size_t q, Complex b, double a,
                                            std::size_t order = kDefaultOrder);

// c prod_j (z - z_j) / (1 - conj(z_j) z) with |c| = 1 and |z_j| < 1.
struct BlaschkeProduct {
    Complex unimodular{1.0, 0.0};
    std::vector<Complex> zeros;

    Complex operator()(Complex z) const;
    std::complex<long double> operator()(std::complex<long double> z) const;

    // Expansion by Cauchy products of the geometric series of each factor.
    TruncatedSeries series(std::size_t order = kDefaultOrder) const;
};

// Zeros uniform (by area) in |z| < zero_radius, unimodular constant uniform on
// the circle. Deterministic in seed.
BlaschkeProduct random_blaschke_product(std::size_t degree, std::uint64_t seed, double zero_radius = 0.9);

// Series of random_blaschke_product(degree, seed), with the tail also capped by
// the class-B coefficient bound 1 - |c_0|^2.
TruncatedSeries random_blaschke(std::size_t degree, std::uint64_t seed, std::size_t order = kDefaultOrder);

// Fejer (Cesaro) mean sum_{n<=degree} (1 - n/(degree+1)) c_n z^n, stored to
// f.order with a zero tail. The Fejer kernel is positive, so the mean of a
// member of the unit ball stays in the unit ball.
TruncatedSeries fejer_mean(const TruncatedSeries& f, std::size_t degree);

// Pair with the given h and g' = k w h', so |g'| <= k |h'| whenever |w| <= 1.
HarmonicPair dilatation_pair(const TruncatedSeries& h, const TruncatedSeries& w, double k);

} // namespace bohr
