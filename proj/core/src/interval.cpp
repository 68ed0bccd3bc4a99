#include "bohrlab/interval.hpp"

#include <cmath>
#include <stdexcept>

namespace bohr {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_)
{
    if (!(lo <= hi) && !(std::isnan(lo) || std::isnan(hi))) {
        throw std::invalid_argument("Interval: lo > hi");
    }
}

Interval& Interval::operator+=(const Interval& other)
{
    lo += other.lo;
    hi += other.hi;
    return *this;
}

Interval operator+(Interval a, const Interval& b)
{
    a += b;
    return a;
}

Interval operator-(const Interval& a, const Interval& b)
{
    return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator*(double s, const Interval& a)
{
    return {s * a.lo, s * a.hi};
}

Interval mul_nonneg(const Interval& a, const Interval& b)
{
    return {a.lo * b.lo, a.hi * b.hi};
}

Interval pow_nonneg(const Interval& a, double p)
{
    const double lo = a.lo <= 0.0 ? 0.0 : std::pow(a.lo, p);
    return {lo, std::pow(a.hi, p)};
}

std::ostream& operator<<(std::ostream& os, const Interval& iv)
{
    return os << '[' << iv.lo << ", " << iv.hi << ']';
}

} // namespace bohr
