#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bohrlab/interval.hpp"
#include "bohrlab/tail_bound.hpp"

namespace bohr {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 200;

// Threshold below which a constant term, a coefficient or an order test is
// treated as zero.
inline constexpr double kZeroTolerance = 1e-12;

// Power series sum_n c_n z^n known through c_N, together with a bound on the
// remainder. Immutable after construction.
class TruncatedSeries {
public:
    // The zero series of order 0.
    TruncatedSeries();

    // Coefficients c_0..c_N with |c_n| <= tail_cap for n > N.
    explicit TruncatedSeries(std::vector<Complex> coeffs, double tail_cap = 0.0);
    TruncatedSeries(std::vector<Complex> coeffs, TailBound tail);

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries constant(Complex c, std::size_t order);
    // c * z^q, stored to `order` (order >= q).
    static TruncatedSeries monomial(std::size_t q, Complex c, std::size_t order);
    static TruncatedSeries identity(std::size_t order) { return monomial(1, 1.0, order); }

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex operator[](std::size_t n) const { return coeffs_[n]; }
    // Coefficient n, zero past the stored order. Only for indices the caller
    // knows to be exact (e.g. polynomials).
    Complex coefficient_or_zero(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

    const TailBound& tail() const { return tail_; }
    double tail_cap() const { return tail_.cap(); }

    // Value of the stored polynomial part at z.
    Complex evaluate_truncated(Complex z) const;
    // Enclosure of |f(z)| accounting for the tail. Requires |z| < 1 unless the
    // tail is zero.
    Interval modulus_at(Complex z) const;

    // Moduli |c_0|..|c_N|.
    std::vector<double> abs_coeffs() const;

    // Same function stored to a lower order; dropped coefficients move into the tail.
    TruncatedSeries truncated(std::size_t order) const;
    // Same function stored to a higher order; new coefficients are zero, so this
    // is only legal for series with a zero tail.
    TruncatedSeries padded(std::size_t order) const;

    // Replace the tail by tail ∩ {|c_n| <= cap}. The caller asserts the cap holds
    // (e.g. |c_n| <= 1 - |c_0|^2 for members of the unit ball).
    TruncatedSeries with_cap(double cap) const;

    // Smallest n >= 1 with |c_n| > kZeroTolerance * max_n |c_n|; throws DegenerateOrder
    // when no such n exists up to the stored order.
    std::size_t zero_order() const;

private:
    std::vector<Complex> coeffs_;
    TailBound tail_;
};

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(Complex s, const TruncatedSeries& f);

// z^q * f, stored to order + q.
TruncatedSeries shift_up(const TruncatedSeries& f, std::size_t q);

// Coefficients of f*g to min(f.order, g.order).
TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g);

// Coefficients of w^k for k = 0..kmax, each to w.order. Requires w(0) = 0 (to
// kZeroTolerance); entry n of row k is the coefficient of z^n in w^k.
std::vector<std::vector<Complex>> inner_powers(const TruncatedSeries& w, std::size_t kmax);

// g(w(z)) to min(g.order, w.order). Requires |w(0)| <= kZeroTolerance.
TruncatedSeries compose(const TruncatedSeries& g, const TruncatedSeries& w);

// Encloses sum_{n >= from_index} |c_n| r^n for 0 <= r < 1.
Interval majorant_sum(const TruncatedSeries& f, double r, std::size_t from_index = 0);

// Encloses sum_{n >= 1} |c_n|^2 r^(2n) for 0 <= r < 1.
Interval weighted_norm_sq(const TruncatedSeries& f, double r);

// Term-wise derivative (order N-1, or a zero series of order 0 when N = 0).
TruncatedSeries derivative(const TruncatedSeries& f);
// Term-wise antiderivative with zero constant term (order N+1).
TruncatedSeries antiderivative(const TruncatedSeries& f);

} // namespace bohr
