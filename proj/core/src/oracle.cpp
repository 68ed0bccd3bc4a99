#include "bohrlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bohrlab/errors.hpp"

namespace bohr {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

std::vector<LongComplex> roots_of_unity(std::size_t n)
{
    std::vector<LongComplex> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long double t = kTwoPi * static_cast<long double>(j) / static_cast<long double>(n);
        w[j] = {std::cos(t), std::sin(t)};
    }
    return w;
}

} // namespace

std::size_t dft_sample_count(std::size_t n_max)
{
    return std::max<std::size_t>(256, 8 * n_max);
}

TruncatedSeries dft_coefficients(const Evaluator& f, double rho, std::size_t n_max, double coefficient_cap)
{
    if (!(rho > 0.0 && rho < 1.0)) {
        throw ParamOutOfRange("extraction radius must lie in (0, 1)");
    }
    if (!(coefficient_cap >= 0.0)) {
        throw ParamOutOfRange("coefficient cap must be nonnegative");
    }
    const std::size_t s = dft_sample_count(n_max);
    const auto unit = roots_of_unity(s);
    std::vector<LongComplex> samples(s);
    for (std::size_t j = 0; j < s; ++j) {
        samples[j] = f(static_cast<long double>(rho) * unit[j]);
    }
    std::vector<Complex> c(n_max + 1);
    long double scale = 1.0L;
    for (std::size_t n = 0; n <= n_max; ++n) {
        LongComplex acc{};
        for (std::size_t j = 0; j < s; ++j) {
            // e^{-i n t_j} = conj(unit[n j mod s])
            acc += samples[j] * std::conj(unit[(n * j) % s]);
        }
        acc /= static_cast<long double>(s) * scale;
        c[n] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
        scale *= rho;
    }
    const double rho_s = std::pow(rho, static_cast<double>(s));
    const double aliasing = coefficient_cap * rho_s / (1.0 - rho_s);
    return TruncatedSeries(std::move(c), coefficient_cap + aliasing);
}

double grid_modulus_check(const Evaluator& f, double r, std::size_t n_points)
{
    const auto unit = roots_of_unity(std::max<std::size_t>(n_points, 1));
    long double best = 0.0L;
    for (const auto& u : unit) {
        best = std::max(best, std::abs(f(static_cast<long double>(r) * u)));
    }
    return static_cast<double>(best);
}

LongComplex stencil_derivative(const Evaluator& f, LongComplex z, long double h)
{
    const LongComplex i(0.0L, 1.0L);
    LongComplex step(h, 0.0L);
    LongComplex weight(1.0L, 0.0L);
    LongComplex acc{};
    for (int j = 0; j < 4; ++j) {
        acc += weight * f(z + step);
        step *= i;
        weight /= i;
    }
    return acc / (4.0L * h);
}

DilatationSample dilatation_check(const HarmonicPair& f, double r, std::size_t n_points)
{
    const auto dh = derivative(f.h);
    const auto dg = derivative(f.g);
    const auto unit = roots_of_unity(std::max<std::size_t>(n_points, 1));
    DilatationSample out;
    for (const auto& u : unit) {
        const Complex z(static_cast<double>(u.real()) * r, static_cast<double>(u.imag()) * r);
        const double hp = std::abs(dh.evaluate_truncated(z));
        if (hp < 1e-14) {
            ++out.skipped;
            continue;
        }
        out.max_ratio = std::max(out.max_ratio, std::abs(dg.evaluate_truncated(z)) / hp);
        ++out.sampled;
    }
    return out;
}

MembershipSample sample_membership(const HarmonicPair& f)
{
    constexpr double kSlack = 1e-10;
    MembershipSample out;
    const auto unit = roots_of_unity(256);
    for (double r : {0.3, 0.6, 0.9}) {
        for (const auto& u : unit) {
            const Complex z(static_cast<double>(u.real()) * r, static_cast<double>(u.imag()) * r);
            out.max_modulus = std::max(out.max_modulus, std::abs(f.h.evaluate_truncated(z)));
        }
        const auto d = dilatation_check(f, r, 256);
        out.max_ratio = std::max(out.max_ratio, d.max_ratio);
        out.skipped += d.skipped;
    }
    out.member = out.max_modulus <= 1.0 + kSlack && out.max_ratio <= f.k + kSlack;
    return out;
}

} // namespace bohr
