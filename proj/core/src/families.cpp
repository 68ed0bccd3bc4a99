#include "bohrlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bohrlab/errors.hpp"
#include "bohrlab/random.hpp"

namespace bohr {

namespace {

void require_unit_parameter(double a, const char* what)
{
    if (!(a >= 0.0 && a < 1.0)) {
        throw ParamOutOfRange(std::string(what) + " must lie in [0, 1), got " + std::to_string(a));
    }
}

void require_dilatation(double k)
{
    if (!(k >= 0.0 && k <= 1.0)) {
        throw ParamOutOfRange("dilatation bound k must lie in [0, 1], got " + std::to_string(k));
    }
}

// Series of (z - zero) / (1 - conj(zero) z).
TruncatedSeries blaschke_factor(Complex zero, std::size_t order)
{
    std::vector<Complex> c(order + 1);
    c[0] = -zero;
    const double scale = 1.0 - std::norm(zero);
    Complex power = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = scale * power;
        power *= std::conj(zero);
    }
    return TruncatedSeries(std::move(c), scale * std::pow(std::abs(zero), static_cast<double>(order)));
}

} // namespace

HarmonicPair::HarmonicPair(TruncatedSeries h_, TruncatedSeries g_, double k_)
    : h(std::move(h_)), g(std::move(g_)), k(k_)
{
    require_dilatation(k);
    if (std::abs(g[0]) > kZeroTolerance) {
        throw ParamOutOfRange("co-analytic part must vanish at the origin");
    }
}

TruncatedSeries disk_automorphism(double a, std::size_t order)
{
    require_unit_parameter(a, "automorphism parameter a");
    std::vector<Complex> c(order + 1);
    c[0] = a;
    const double scale = 1.0 - a * a;
    double power = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = scale * power;
        power *= -a;
    }
    return TruncatedSeries(std::move(c), scale * std::pow(a, static_cast<double>(order)));
}

HarmonicPair extremal_harmonic(double a, double k, std::size_t order)
{
    require_dilatation(k);
    auto h = disk_automorphism(a, order);
    auto g = Complex(k) * (h - TruncatedSeries::constant(a, order));
    return HarmonicPair(std::move(h), std::move(g), k);
}

double subordinate_square_coefficient(double a, std::size_t j)
{
    if (j == 0) {
        return a * a;
    }
    const double jd = static_cast<double>(j);
    return (1.0 - a * a) * std::pow(a, jd - 2.0) * (jd - 1.0 - (jd + 1.0) * a * a);
}

std::size_t subordinate_square_sign_index(double a)
{
    if (!(a > 0.0 && a < 1.0)) {
        throw ParamOutOfRange("sign index needs a in (0, 1)");
    }
    // (N-1)/(N+1) <= a^2  <=>  N <= (1+a^2)/(1-a^2); the largest such N.
    const double a2 = a * a;
    auto n = static_cast<std::size_t>(std::floor((1.0 + a2) / (1.0 - a2)));
    // Guard the floor against rounding on either side.
    auto lower_ok = [&](std::size_t m) { return (static_cast<double>(m) - 1.0) / (static_cast<double>(m) + 1.0) <= a2; };
    while (n > 1 && !lower_ok(n)) {
        --n;
    }
    while (lower_ok(n + 1)) {
        ++n;
    }
    return std::max<std::size_t>(n, 1);
}

TruncatedSeries subordinate_square(double a, std::size_t order)
{
    if (!(a > 0.0 && a < 1.0)) {
        throw ParamOutOfRange("subordinate_square needs a in (0, 1)");
    }
    if (order < 2) {
        throw ParamOutOfRange("subordinate_square needs order >= 2");
    }
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 2; n <= order; ++n) {
        c[n] = subordinate_square_coefficient(a, n - 2);
    }
    // Past the sign index |A_j| = a^(j-2) times a positive increasing linear
    // function of j, which is unimodal; scan until it starts to decrease.
    const std::size_t sign_index = subordinate_square_sign_index(a);
    double cap = 0.0;
    double previous = 0.0;
    for (std::size_t j = order - 1;; ++j) {
        const double v = std::abs(subordinate_square_coefficient(a, j));
        cap = std::max(cap, v);
        if (j > sign_index + 1 && v < previous) {
            break;
        }
        previous = v;
    }
    return TruncatedSeries(std::move(c), cap);
}

TruncatedSeries monomial_times_automorphism(std::size_t q, Complex b, double a, std::size_t order)
{
    if (!(std::abs(b) <= 1.0)) {
        throw ParamOutOfRange("monomial coefficient must satisfy |b| <= 1");
    }
    if (q > order) {
        throw ParamOutOfRange("monomial degree exceeds the storage order");
    }
    return b * shift_up(disk_automorphism(a, order - q), q);
}

Complex BlaschkeProduct::operator()(Complex z) const
{
    Complex v = unimodular;
    for (Complex zj : zeros) {
        v *= (z - zj) / (1.0 - std::conj(zj) * z);
    }
    return v;
}

std::complex<long double> BlaschkeProduct::operator()(std::complex<long double> z) const
{
    std::complex<long double> v(unimodular.real(), unimodular.imag());
    for (Complex zj : zeros) {
        const std::complex<long double> w(zj.real(), zj.imag());
        v *= (z - w) / (1.0L - std::conj(w) * z);
    }
    return v;
}

TruncatedSeries BlaschkeProduct::series(std::size_t order) const
{
    auto f = TruncatedSeries::constant(unimodular, order);
    for (Complex zj : zeros) {
        f = cauchy_product(f, blaschke_factor(zj, order));
    }
    return f;
}

BlaschkeProduct random_blaschke_product(std::size_t degree, std::uint64_t seed, double zero_radius)
{
    if (!(zero_radius > 0.0 && zero_radius < 1.0)) {
        throw ParamOutOfRange("zero radius must lie in (0, 1)");
    }
    Rng rng(seed);
    BlaschkeProduct b;
    b.unimodular = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    b.zeros.reserve(degree);
    for (std::size_t j = 0; j < degree; ++j) {
        const double rho = zero_radius * std::sqrt(rng.uniform());
        b.zeros.push_back(std::polar(rho, 2.0 * std::numbers::pi * rng.uniform()));
    }
    return b;
}

TruncatedSeries random_blaschke(std::size_t degree, std::uint64_t seed, std::size_t order)
{
    const auto f = random_blaschke_product(degree, seed).series(order);
    return f.with_cap(std::max(0.0, 1.0 - std::norm(f[0])));
}

TruncatedSeries fejer_mean(const TruncatedSeries& f, std::size_t degree)
{
    if (degree > f.order()) {
        throw ParamOutOfRange("fejer_mean degree exceeds the stored order");
    }
    std::vector<Complex> c(f.order() + 1);
    const double denom = static_cast<double>(degree + 1);
    for (std::size_t n = 0; n <= degree; ++n) {
        c[n] = (1.0 - static_cast<double>(n) / denom) * f[n];
    }
    return TruncatedSeries(std::move(c));
}

HarmonicPair dilatation_pair(const TruncatedSeries& h, const TruncatedSeries& w, double k)
{
    require_dilatation(k);
    auto g = antiderivative(Complex(k) * cauchy_product(w, derivative(h)));
    return HarmonicPair(h, std::move(g), k);
}

} // namespace bohr
