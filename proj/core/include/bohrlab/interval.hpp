#pragma once

#include <ostream>

namespace bohr {

// Closed real interval [lo, hi]. Every quantity that depends on a truncated
// tail is returned as one of these.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_);

    static Interval point(double x) { return {x, x}; }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x, double slack = 0.0) const { return lo - slack <= x && x <= hi + slack; }

    Interval& operator+=(const Interval& other);
};

Interval operator+(Interval a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);

// Scaling by a nonnegative factor.
Interval operator*(double s, const Interval& a);

// Product of two intervals contained in [0, inf).
Interval mul_nonneg(const Interval& a, const Interval& b);

// x -> x^p on [0, inf), p > 0; monotone so endpoints map to endpoints.
Interval pow_nonneg(const Interval& a, double p);

std::ostream& operator<<(std::ostream& os, const Interval& iv);

} // namespace bohr
