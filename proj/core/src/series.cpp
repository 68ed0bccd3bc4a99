#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "bohrlab/errors.hpp"

namespace bohr {

namespace {

void require_radius(double r, const char* where)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw RadiusOutOfRange(std::string(where) + ": radius must lie in [0, 1), got " + std::to_string(r));
    }
}

std::vector<Complex> require_inner(const TruncatedSeries& w)
{
    if (std::abs(w[0]) > kZeroTolerance) {
        throw NonVanishingInnerConstant("inner function must vanish at the origin, |w(0)| = " +
                                        std::to_string(std::abs(w[0])));
    }
    std::vector<Complex> c(w.coeffs().begin(), w.coeffs().end());
    c[0] = 0.0;
    return c;
}

// Rows k = 0..kmax of the truncated powers of a series with zero constant term.
template <typename T>
std::vector<std::vector<T>> powers_table(const std::vector<T>& w, std::size_t kmax)
{
    const std::size_t n = w.size();
    std::vector<std::vector<T>> rows(kmax + 1, std::vector<T>(n, T{}));
    rows[0][0] = T{1};
    for (std::size_t k = 1; k <= kmax; ++k) {
        const auto& prev = rows[k - 1];
        auto& row = rows[k];
        // w^(k-1) vanishes below k-1 and w below 1, so w^k vanishes below k.
        for (std::size_t m = k; m < n; ++m) {
            T acc{};
            for (std::size_t j = 1; j + (k - 1) <= m; ++j) {
                acc += w[j] * prev[m - j];
            }
            row[m] = acc;
        }
    }
    return rows;
}

} // namespace

TruncatedSeries::TruncatedSeries() : coeffs_(1, Complex{}) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, double tail_cap)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw ParamOutOfRange("TruncatedSeries needs at least one coefficient");
    }
    if (!(tail_cap >= 0.0)) {
        throw ParamOutOfRange("tail_cap must be nonnegative");
    }
    tail_ = TailBound::uniform(tail_cap, order());
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, TailBound tail)
    : coeffs_(std::move(coeffs)), tail_(std::move(tail))
{
    if (coeffs_.empty()) {
        throw ParamOutOfRange("TruncatedSeries needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order)
{
    return TruncatedSeries(std::vector<Complex>(order + 1));
}

TruncatedSeries TruncatedSeries::constant(Complex c, std::size_t order)
{
    std::vector<Complex> coeffs(order + 1);
    coeffs[0] = c;
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t q, Complex c, std::size_t order)
{
    if (q > order) {
        throw ParamOutOfRange("monomial degree exceeds the storage order");
    }
    std::vector<Complex> coeffs(order + 1);
    coeffs[q] = c;
    return TruncatedSeries(std::move(coeffs));
}

Complex TruncatedSeries::evaluate_truncated(Complex z) const
{
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Interval TruncatedSeries::modulus_at(Complex z) const
{
    const double v = std::abs(evaluate_truncated(z));
    const double t = tail_.is_zero() ? 0.0 : tail_.sum(std::abs(z));
    return {std::max(0.0, v - t), v + t};
}

std::vector<double> TruncatedSeries::abs_coeffs() const
{
    std::vector<double> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [](Complex c) { return std::abs(c); });
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const
{
    if (new_order >= order()) {
        if (new_order == order()) {
            return *this;
        }
        throw ParamOutOfRange("truncated(): requested order exceeds the stored order");
    }
    std::vector<double> dropped;
    dropped.reserve(order() - new_order);
    for (std::size_t n = new_order + 1; n <= order(); ++n) {
        dropped.push_back(std::abs(coeffs_[n]));
    }
    std::vector<Complex> kept(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order + 1));
    return TruncatedSeries(std::move(kept), TailBound::explicit_terms(new_order + 1, std::move(dropped), tail_));
}

TruncatedSeries TruncatedSeries::padded(std::size_t new_order) const
{
    if (new_order <= order()) {
        return truncated(new_order);
    }
    if (!tail_.is_zero()) {
        throw ParamOutOfRange("padded(): only series with a zero tail can be extended");
    }
    std::vector<Complex> coeffs(coeffs_);
    coeffs.resize(new_order + 1);
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::with_cap(double cap) const
{
    if (!(cap >= 0.0)) {
        throw ParamOutOfRange("with_cap(): cap must be nonnegative");
    }
    return TruncatedSeries(coeffs_, tail_.intersect(TailBound::uniform(cap, order())));
}

std::size_t TruncatedSeries::zero_order() const
{
    double biggest = 0.0;
    for (Complex c : coeffs_) {
        biggest = std::max(biggest, std::abs(c));
    }
    const double threshold = kZeroTolerance * biggest;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        if (std::abs(coeffs_[n]) > threshold && biggest > 0.0) {
            return n;
        }
    }
    throw DegenerateOrder("series is constant through its stored order");
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g)
{
    const std::size_t n = std::min(f.order(), g.order());
    const auto a = f.truncated(n);
    const auto b = g.truncated(n);
    std::vector<Complex> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = a[i] + b[i];
    }
    return TruncatedSeries(std::move(c), a.tail().plus(b.tail()));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g)
{
    return f + Complex(-1.0) * g;
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& f)
{
    std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) {
        x *= s;
    }
    return TruncatedSeries(std::move(c), f.tail().scaled(std::abs(s)));
}

TruncatedSeries shift_up(const TruncatedSeries& f, std::size_t q)
{
    std::vector<Complex> c(q, Complex{});
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    return TruncatedSeries(std::move(c), f.tail().shifted(q));
}

TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g)
{
    const std::size_t n = std::min(f.order(), g.order());
    const auto a = f.truncated(n);
    const auto b = g.truncated(n);
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex acc{};
        for (std::size_t i = 0; i <= k; ++i) {
            acc += a[i] * b[k - i];
        }
        c[k] = acc;
    }
    if (a.tail().is_zero() && b.tail().is_zero()) {
        // Both are polynomials: the dropped coefficients are known exactly.
        std::vector<double> dropped(n);
        for (std::size_t k = n + 1; k <= 2 * n; ++k) {
            Complex acc{};
            for (std::size_t i = k - n; i <= n; ++i) {
                acc += a[i] * b[k - i];
            }
            dropped[k - n - 1] = std::abs(acc);
        }
        return TruncatedSeries(std::move(c), TailBound::explicit_terms(n + 1, std::move(dropped), TailBound()));
    }
    const auto abs_a = a.abs_coeffs();
    const auto abs_b = b.abs_coeffs();
    return TruncatedSeries(std::move(c), TailBound::product(abs_a, a.tail(), abs_b, b.tail()));
}

std::vector<std::vector<Complex>> inner_powers(const TruncatedSeries& w, std::size_t kmax)
{
    return powers_table(require_inner(w), kmax);
}

TruncatedSeries compose(const TruncatedSeries& g, const TruncatedSeries& w)
{
    const auto inner_full = require_inner(w);
    const std::size_t n = std::min(g.order(), w.order());
    const auto gg = g.truncated(n);
    const auto ww = w.truncated(n);
    std::vector<Complex> inner(inner_full.begin(), inner_full.begin() + static_cast<std::ptrdiff_t>(n + 1));

    // A polynomial g only needs the powers of w up to its degree.
    std::size_t kmax = n;
    if (gg.tail().is_zero()) {
        kmax = 1;
        for (std::size_t k = n; k > 1; --k) {
            if (gg[k] != Complex{}) {
                kmax = k;
                break;
            }
        }
        kmax = std::min(kmax, n);
    }
    const auto alpha = powers_table(inner, kmax);
    std::vector<Complex> c(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        Complex acc{};
        for (std::size_t k = 0; k <= std::min(m, kmax); ++k) {
            acc += gg[k] * alpha[k][m];
        }
        c[m] = acc;
    }

    std::vector<double> abs_inner(n + 1);
    std::transform(inner.begin(), inner.end(), abs_inner.begin(), [](Complex x) { return std::abs(x); });
    auto abs_powers = powers_table(abs_inner, std::max<std::size_t>(kmax, 1));
    if (n == 0) {
        abs_powers[1].assign(1, 0.0);
    }
    const auto abs_g = gg.abs_coeffs();
    TailBound tail = TailBound::composition(abs_g, gg.tail(), std::move(abs_powers), ww.tail());
    return TruncatedSeries(std::move(c), std::move(tail));
}

Interval majorant_sum(const TruncatedSeries& f, double r, std::size_t from_index)
{
    require_radius(r, "majorant_sum");
    double known = 0.0;
    double x = 1.0;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (n >= from_index) {
            known += std::abs(f[n]) * x;
        }
        x *= r;
    }
    const double tail = f.tail().is_zero() ? 0.0 : f.tail().sum(r);
    return {known, known + tail};
}

Interval weighted_norm_sq(const TruncatedSeries& f, double r)
{
    require_radius(r, "weighted_norm_sq");
    const double r2 = r * r;
    double known = 0.0;
    double x = r2;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        known += std::norm(f[n]) * x;
        x *= r2;
    }
    const double tail = f.tail().is_zero() ? 0.0 : f.tail().sq_sum(r);
    return {known, known + tail};
}

TruncatedSeries derivative(const TruncatedSeries& f)
{
    const std::size_t n = f.order();
    if (n == 0) {
        if (!f.tail().is_zero()) {
            throw ParamOutOfRange("derivative(): order-0 series with a nonzero tail has no known coefficient");
        }
        return TruncatedSeries::zero(0);
    }
    std::vector<Complex> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = static_cast<double>(i + 1) * f[i + 1];
    }
    return TruncatedSeries(std::move(c), f.tail().derivative(n));
}

TruncatedSeries antiderivative(const TruncatedSeries& f)
{
    const std::size_t n = f.order();
    std::vector<Complex> c(n + 2);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i + 1] = f[i] / static_cast<double>(i + 1);
    }
    return TruncatedSeries(std::move(c), f.tail().antiderivative(n));
}

} // namespace bohr
