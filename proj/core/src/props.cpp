#include "bohrlab/props.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "bohrlab/errors.hpp"
#include "bohrlab/harmonic.hpp"
#include "bohrlab/oracle.hpp"
#include "bohrlab/parallel.hpp"
#include "bohrlab/quasisub.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/random.hpp"

namespace bohr {

namespace {

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    // Records value <= limit.
    template <typename What>
    void at_most(double value, double limit, What&& what)
    {
        ++r_.cases;
        const double excess = value - limit;
        r_.worst = std::max(r_.worst, excess);
        if (!(excess <= 0.0)) {
            fail(std::string(what()) + ": " + fmt(value) + " > " + fmt(limit));
        }
    }

    template <typename What>
    void require(bool ok, What&& what)
    {
        ++r_.cases;
        if (!ok) {
            fail(std::string(what()));
        }
    }

    void merge(const PropertyResult& other)
    {
        r_.cases += other.cases;
        r_.worst = std::max(r_.worst, other.worst);
        if (other.violations > 0) {
            if (r_.violations == 0) {
                r_.detail = other.detail;
            }
            r_.violations += other.violations;
        }
    }

    const PropertyResult& result() const { return r_; }

private:
    void fail(std::string what)
    {
        if (r_.violations++ == 0) {
            r_.detail = std::move(what);
        }
    }

    PropertyResult r_;
};

std::size_t scaled(std::size_t n, const PropertyConfig& config)
{
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(static_cast<double>(n) * config.scale)));
}

// Runs `sample(i)` for i < n in parallel; each returns one result per
// property, merged in index order.
std::vector<PropertyResult> sampled(std::size_t n, const std::vector<std::string>& names,
                                    const std::function<std::vector<PropertyResult>(std::size_t)>& sample)
{
    const auto parts = parallel_map(n, sample);
    std::vector<Tally> tallies;
    tallies.reserve(names.size());
    for (const auto& name : names) {
        tallies.emplace_back(name);
    }
    for (const auto& part : parts) {
        for (std::size_t j = 0; j < tallies.size() && j < part.size(); ++j) {
            tallies[j].merge(part[j]);
        }
    }
    std::vector<PropertyResult> out;
    for (const auto& t : tallies) {
        out.push_back(t.result());
    }
    return out;
}

std::vector<PropertyResult> results_of(const std::vector<Tally>& tallies)
{
    std::vector<PropertyResult> out;
    for (const auto& t : tallies) {
        out.push_back(t.result());
    }
    return out;
}

std::vector<Tally> tallies_for(const std::vector<std::string>& names)
{
    std::vector<Tally> t;
    for (const auto& n : names) {
        t.emplace_back(n);
    }
    return t;
}

TruncatedSeries class_b_series(const BlaschkeProduct& b, std::size_t order)
{
    const auto f = b.series(order);
    return f.with_cap(std::max(0.0, 1.0 - std::norm(f[0])));
}

Complex random_point(Rng& rng, double radius)
{
    return std::polar(radius * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
}

// ---------------------------------------------------------------- oracle helpers

LongComplex widen(Complex z)
{
    return {z.real(), z.imag()};
}

LongComplex horner(const TruncatedSeries& f, LongComplex z)
{
    LongComplex acc{};
    for (std::size_t n = f.order() + 1; n-- > 0;) {
        acc = acc * z + widen(f[n]);
    }
    return acc;
}

LongComplex automorphism_value(long double a, LongComplex z)
{
    return (z + a) / (1.0L + a * z);
}

// B'(z) = c sum_j (1 - |z_j|^2)/(1 - conj(z_j) z)^2 prod_{i != j} factor_i(z).
LongComplex blaschke_derivative(const BlaschkeProduct& b, LongComplex z)
{
    LongComplex total{};
    for (std::size_t j = 0; j < b.zeros.size(); ++j) {
        const LongComplex zj = widen(b.zeros[j]);
        const LongComplex d = 1.0L - std::conj(zj) * z;
        LongComplex term = (1.0L - std::norm(zj)) / (d * d);
        for (std::size_t i = 0; i < b.zeros.size(); ++i) {
            if (i != j) {
                const LongComplex zi = widen(b.zeros[i]);
                term *= (z - zi) / (1.0L - std::conj(zi) * z);
            }
        }
        total += term;
    }
    return widen(b.unimodular) * total;
}

// Largest coefficient deviation over 0..n_max.
double coefficient_gap(const TruncatedSeries& engine, const TruncatedSeries& oracle, std::size_t n_max)
{
    double worst = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        worst = std::max(worst, std::abs(engine.coefficient_or_zero(n) - oracle.coefficient_or_zero(n)));
    }
    return worst;
}

constexpr double kOracleTolerance = 1e-9;
constexpr double kOracleRadius = 0.7;
constexpr std::size_t kOracleDegree = 64;

void compare_with_oracle(Tally& t, const std::string& label, const TruncatedSeries& engine, const Evaluator& f,
                         double rho = kOracleRadius, std::size_t n_max = kOracleDegree)
{
    const auto oracle = dft_coefficients(f, rho, n_max);
    t.at_most(coefficient_gap(engine, oracle, n_max), kOracleTolerance, [&] { return label; });
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index)
{
    // splitmix64 finalizer over a combination of the three inputs.
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream * 0x100000001B3ULL + index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

TruncatedSeries QuasiTriple::w_series(std::size_t order) const
{
    return shift_up(inner.series(order - 1), 1);
}

QuasiTriple random_quasi_triple(std::uint64_t seed, std::size_t order)
{
    Rng rng(seed);
    QuasiTriple t;
    t.phi = random_blaschke_product(rng.below(5), derive_seed(seed, 1, 0));
    const auto outer = random_blaschke_product(1 + rng.below(5), derive_seed(seed, 2, 0));
    t.g = fejer_mean(outer.series(order), 1 + rng.below(8));
    t.inner = random_blaschke_product(rng.below(4), derive_seed(seed, 3, 0));
    return t;
}

// ---------------------------------------------------------------- lemmas

std::vector<PropertyResult> lemma_properties(const PropertyConfig& config)
{
    const std::vector<std::string> names = {"schwarz_pick_bound", "coefficient_bound", "tail_majorant_bounds",
                                            "refined_majorant_analytic"};
    auto out = sampled(scaled(100, config), names, [&](std::size_t i) {
        auto t = tallies_for(names);
        const auto seed = derive_seed(config.seed, 10, i);
        const auto b = random_blaschke_product(i % 8, seed);
        const auto f = class_b_series(b, config.order);
        const double a0 = std::abs(f[0]);

        Rng rng(derive_seed(seed, 11, 0));
        for (int j = 0; j < 100; ++j) {
            const Complex z = random_point(rng, 0.99);
            const double bound = (std::abs(z) + a0) / (1.0 + a0 * std::abs(z));
            t[0].at_most(std::abs(b(z)), bound + 1e-10, [&] { return "sample " + std::to_string(i); });
        }
        for (std::size_t n = 1; n <= f.order(); ++n) {
            t[1].at_most(std::abs(f[n]), 1.0 - a0 * a0 + 1e-10,
                         [&] { return "sample " + std::to_string(i) + " n=" + std::to_string(n); });
        }
        const HarmonicPair analytic(f, TruncatedSeries::zero(f.order()), 0.0);
        for (int j = 1; j <= 8; ++j) {
            const double r = 0.1 * j;
            const double tail = majorant_sum(f, r, 1).hi;
            const double bound = a0 >= r ? r * (1.0 - a0 * a0) / (1.0 - r * a0)
                                         : r * std::sqrt(1.0 - a0 * a0) / std::sqrt(1.0 - r * r);
            t[2].at_most(tail, bound + 1e-10,
                         [&] { return "sample " + std::to_string(i) + " r=" + fmt(r); });
            t[3].at_most(refined_majorant(analytic, r).hi, refined_majorant_bound(a0, 0.0, r) + 1e-10,
                         [&] { return "sample " + std::to_string(i) + " r=" + fmt(r); });
        }
        return results_of(t);
    });

    Tally eq("refined_majorant_equality");
    for (double a : {0.0, 0.3, 0.6, 0.9, 0.95}) {
        for (double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const auto pair = extremal_harmonic(a, k, config.order);
            for (double r : {0.1, 0.3}) {
                const Interval e = refined_majorant(pair, r);
                const double exact = refined_majorant_bound(a, k, r);
                eq.at_most(std::max(std::abs(e.lo - exact), std::abs(e.hi - exact)), 1e-9,
                           [&] { return "a=" + fmt(a) + " k=" + fmt(k) + " r=" + fmt(r); });
            }
        }
    }
    out.push_back(eq.result());
    return out;
}

// ---------------------------------------------------------------- radii

PropertyResult power_ratio_monotonicity_property()
{
    constexpr int kGrid = 10000;
    constexpr double kSlack = 1e-10;
    Tally t("power_ratio_monotone");
    for (double p : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0}) {
        double previous = power_ratio(p, 0.0);
        for (int i = 0; i <= kGrid; ++i) {
            const double x = static_cast<double>(i) / kGrid;
            const double v = power_ratio(p, x);
            const auto where = [&] { return "p=" + fmt(p) + " x=" + fmt(x); };
            if (p < 2.0) {
                t.at_most(1.0 - kSlack, v, where);
                if (x < 1.0) {
                    t.at_most(v, 2.0 / p + kSlack, where);
                }
                if (i > 0) {
                    t.at_most(previous, v + kSlack, where);
                }
            } else if (p > 2.0) {
                t.at_most(v, 1.0 + kSlack, where);
                if (x < 1.0) {
                    t.at_most(2.0 / p - kSlack, v, where);
                }
                if (i > 0) {
                    t.at_most(v, previous + kSlack, where);
                }
            } else {
                t.at_most(std::abs(v - 1.0), kSlack, where);
            }
            previous = v;
        }
    }
    return t.result();
}

PropertyResult head_radius_monotonicity_property()
{
    constexpr int kGrid = 10000;
    constexpr double kSlack = 1e-10;
    Tally t("head_radius_decreasing");
    for (double p : {0.5, 1.0, 1.5, 2.0}) {
        double previous = head_radius(p, 0.0);
        t.at_most(std::abs(previous - 1.0 / std::numbers::sqrt2), kSlack, [&] { return "p=" + fmt(p) + " x=0"; });
        for (int i = 1; i <= kGrid; ++i) {
            const double x = static_cast<double>(i) / kGrid;
            const double v = head_radius(p, x);
            t.at_most(v, previous + kSlack, [&] { return "p=" + fmt(p) + " x=" + fmt(x); });
            previous = v;
        }
        t.at_most(std::abs(previous - p / (2.0 + p)), kSlack, [&] { return "p=" + fmt(p) + " x=1"; });
    }
    return t.result();
}

std::vector<PropertyResult> radii_properties(const PropertyConfig&)
{
    std::vector<PropertyResult> out;

    Tally residual("branch_point_residual");
    Tally continuity("head_radius_continuity");
    Tally below_one("head_radius_below_one");
    for (double p : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 8.0}) {
        const double c = branch_point(p);
        residual.at_most(std::abs(1.0 - c - std::pow(c, p)), 1e-11, [&] { return "p=" + fmt(p); });
        // Both branch formulas collapse to x at the branch point.
        const double gap = 1.0 - std::pow(c, p);
        const double inner = gap / std::sqrt(1.0 - c * c + gap * gap);
        const double outer = gap / (1.0 - c * c + c * gap);
        continuity.at_most(std::abs(inner - outer), 1e-10, [&] { return "branches at p=" + fmt(p); });
        continuity.at_most(std::abs(head_radius(p, c) - c), 1e-10, [&] { return "value at p=" + fmt(p); });
        for (double x : {c, 1.0}) {
            const double left = head_radius(p, x - 1e-9);
            const double right = x < 1.0 ? head_radius(p, x + 1e-9) : head_radius(p, 1.0);
            continuity.at_most(std::abs(left - right), 1e-6, [&] { return "jump at x=" + fmt(x) + " p=" + fmt(p); });
        }
        const double tp_left = power_ratio(p, 1.0 - 1e-9);
        continuity.at_most(std::abs(tp_left - 2.0 / p), 1e-6, [&] { return "power ratio at 1, p=" + fmt(p); });
        for (int i = 0; i <= 1000; ++i) {
            const double x = i / 1000.0;
            below_one.at_most(head_radius(p, x), 1.0 - 1e-12, [&] { return "p=" + fmt(p) + " x=" + fmt(x); });
        }
    }
    out.push_back(residual.result());
    out.push_back(continuity.result());
    out.push_back(power_ratio_monotonicity_property());
    out.push_back(head_radius_monotonicity_property());
    out.push_back(below_one.result());

    Tally roots("harmonic_radius_bounds");
    for (int m : {1, 2, 3}) {
        for (double k : {0.0, 0.5, 1.0}) {
            for (double a : {0.0, 0.3, 0.6, 0.9}) {
                const double r2 = harmonic_radius({2.0, k, m, a});
                const auto where = [&] { return "m=" + std::to_string(m) + " k=" + fmt(k) + " a=" + fmt(a); };
                roots.at_most(r2, 1.0 / (2.0 + k), where);
                for (double p : {0.5, 1.0, 1.5, 2.0}) {
                    const RadiusParams params{p, k, m, a};
                    const double r = harmonic_radius(params);
                    roots.at_most(std::abs(normalized_gap(params, r)), 1e-10, where);
                    roots.at_most(r, r2 + 1e-12, where);
                    if (p <= 1.0) {
                        roots.at_most(r, harmonic_radius_cap(a, k), where);
                    }
                }
            }
        }
    }
    out.push_back(roots.result());

    Tally uniform("uniform_radius_bounds");
    for (int m : {1, 2, 3, 5}) {
        double previous_p = 0.0;
        for (double p : {0.25, 0.5, 1.0, 1.5, 2.0}) {
            double previous_k = 1.0;
            for (double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const RadiusParams params{p, k, m, 0.0};
                const double r = uniform_harmonic_radius(params);
                const auto where = [&] { return "m=" + std::to_string(m) + " p=" + fmt(p) + " k=" + fmt(k); };
                uniform.at_most(std::abs(uniform_radius_polynomial(params, r)), 1e-10, where);
                uniform.at_most(r, uniform_harmonic_radius_bound(p, k) + 1e-12, where);
                uniform.at_most(uniform_harmonic_radius_bound(p, k), 1.0 / (2.0 + k) + 1e-12, where);
                uniform.at_most(0.0, uniform_radius_polynomial(params, uniform_harmonic_radius_bound(p, k)), where);
                uniform.at_most(r, previous_k + 1e-12, where);
                previous_k = r;
                if (k == 0.0) {
                    uniform.at_most(previous_p, r + 1e-12, where);
                    previous_p = r;
                }
            }
        }
    }
    out.push_back(uniform.result());

    Tally infimum("limit_radius_infimum");
    for (double k : {0.0, 0.5, 1.0}) {
        for (double p : {0.5, 1.0, 2.0, 3.0, 4.0}) {
            double smallest = 1.0;
            for (int i = 0; i < 10000; ++i) {
                // Refine towards a = 1 where the infimum is approached for p <= 2.
                const double a = 1.0 - std::pow(10.0, -6.0 * i / 9999.0);
                smallest = std::min(smallest, limit_harmonic_radius({p, k, 1, std::max(0.0, a)}));
            }
            smallest = std::min(smallest, limit_harmonic_radius({p, k, 1, 0.0}));
            const double inf = limit_harmonic_radius_infimum(p, k);
            const auto where = [&] { return "p=" + fmt(p) + " k=" + fmt(k); };
            infimum.at_most(inf, smallest + 1e-9, where);
            infimum.at_most(smallest - inf, 1e-3, where);
        }
    }
    out.push_back(infimum.result());
    return out;
}

// ---------------------------------------------------------------- quasisub

PropertyResult head_radius_property(const PropertyConfig& config)
{
    const std::vector<std::string> names = {"head_radius_random"};
    return sampled(scaled(500, config), names, [&](std::size_t i) {
        Tally t(names[0]);
        const auto seed = derive_seed(config.seed, 20, i);
        const auto f = random_blaschke(i % 8, seed, config.order);
        const double a0 = std::min(1.0, std::abs(f[0]));
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
            const double r = head_radius(p, a0);
            t.at_most(bohr_head_sum(f, p, r).hi, 1.0 + 1e-9,
                      [&] { return "sample " + std::to_string(i) + " p=" + fmt(p); });
        }
        return std::vector<PropertyResult>{t.result()};
    })[0];
}

PropertyResult quasi_subordination_property(const PropertyConfig& config)
{
    const std::vector<std::string> names = {"quasi_subordination_random"};
    return sampled(scaled(200, config), names, [&](std::size_t i) {
        Tally t(names[0]);
        const auto triple = random_quasi_triple(derive_seed(config.seed, 30, i), config.order);
        const auto phi = triple.phi_series(config.order);
        const auto w = triple.w_series(config.order);
        const double radius = quasi_subordination_radius(std::min(1.0, std::abs(phi[0])),
                                                         std::min(1.0, std::abs(w[1])));
        const auto rep = majorant_compare(quasi_compose(phi, triple.g, w), triple.g, radius - 1e-6);
        t.require(rep.verdict == Verdict::Holds, [&] {
            return "triple " + std::to_string(i) + " " + std::string(to_string(rep.verdict)) + " lhs.hi=" +
                   fmt(rep.lhs.hi) + " rhs.lo=" + fmt(rep.rhs.lo);
        });
        return std::vector<PropertyResult>{t.result()};
    })[0];
}

std::vector<PropertyResult> quasisub_properties(const PropertyConfig& config)
{
    std::vector<PropertyResult> out;
    out.push_back(head_radius_property(config));
    out.push_back(quasi_subordination_property(config));

    const std::vector<std::string> names = {"majorization_random"};
    out.push_back(sampled(scaled(100, config), names, [&](std::size_t i) {
        Tally t(names[0]);
        const auto seed = derive_seed(config.seed, 40, i);
        Rng rng(seed);
        const std::size_t q = 1 + rng.below(3);
        const auto phi = random_blaschke(rng.below(5), derive_seed(seed, 1, 0), config.order);
        const auto base = random_blaschke_product(1 + rng.below(4), derive_seed(seed, 2, 0)).series(config.order);
        const auto g = shift_up(fejer_mean(base, 1 + rng.below(6)), q).truncated(config.order);
        const auto f = cauchy_product(phi, g);
        const double ratio = std::min(1.0, std::abs(f[q] / g[q]));
        const auto rep = majorant_compare(f, g, classical_radius(ratio) - 1e-6);
        t.require(rep.verdict == Verdict::Holds, [&] { return "pair " + std::to_string(i); });
        return std::vector<PropertyResult>{t.result()};
    })[0]);

    Tally signs("square_sign_pattern");
    for (double a : {0.3, 0.5, 0.75, 0.8, 0.9, 0.95, 0.99}) {
        const std::size_t n = subordinate_square_sign_index(a);
        const double a2 = a * a;
        signs.require((n - 1.0) / (n + 1.0) <= a2 && a2 < n / (n + 2.0), [&] { return "index a=" + fmt(a); });
        for (std::size_t j = 1; j <= n + 200; ++j) {
            const double c = subordinate_square_coefficient(a, j);
            signs.require(j <= n ? c <= 0.0 : c > 0.0,
                          [&] { return "a=" + fmt(a) + " j=" + std::to_string(j); });
        }
    }
    out.push_back(signs.result());

    Tally region("square_limit_region");
    for (double a : {0.75, 0.8, 0.9, 0.95}) {
        const auto roots = crossover_roots(a);
        region.at_most(std::abs(square_majorant_limit(a, roots.plus) - 1.0), 1e-12, [&] { return "root a=" + fmt(a); });
        region.at_most(std::abs(square_majorant_limit(a, 0.0) - a * a), 1e-12, [&] { return "origin a=" + fmt(a); });
        for (int i = 0; i < 1000; ++i) {
            const double r = i / 1000.0;
            if (std::abs(r - roots.plus) < 1e-9 || std::abs(r - roots.minus) < 1e-9) {
                continue;
            }
            const bool below = square_majorant_limit(a, r) <= 1.0;
            const bool predicted = r <= roots.plus || r >= roots.minus;
            region.require(below == predicted, [&] { return "a=" + fmt(a) + " r=" + fmt(r); });
            if (r < 0.9) {
                region.at_most(square_majorant_limit(a, r), square_majorant(a, r) + 1e-12,
                               [&] { return "limit vs exact a=" + fmt(a) + " r=" + fmt(r); });
            }
        }
    }
    out.push_back(region.result());

    Tally crossing("square_crossover");
    double previous = 1.0;
    for (double a : {0.75, 0.8, 0.9, 0.95, 0.99, 0.999}) {
        const auto f = subordinate_square(a, config.order);
        const auto g = TruncatedSeries::monomial(2, 1.0, config.order);
        const double upper = crossover_roots(a).plus;
        const auto b = majorant_crossover(f, g, 0.25, std::min(0.9, upper + 0.05));
        const auto where = [&] { return "a=" + fmt(a) + " crossover=" + fmt(b.mid()); };
        crossing.at_most(classical_radius(a * a) - 1e-7, b.mid(), where);
        crossing.at_most(b.mid(), upper + 1e-7, where);
        crossing.at_most(b.mid(), previous, where);
        previous = b.mid();
        // Two evaluations of the same majorant at a probe radius.
        const double probe = 0.3;
        const double via_series = majorant_sum(f, probe).mid() / (probe * probe);
        crossing.at_most(std::abs(via_series - square_majorant(a, probe)), 1e-9, where);
    }
    crossing.at_most(previous, 1.0 / 3.0 + 1e-3, [] { return "a -> 1 limit"; });
    out.push_back(crossing.result());
    return out;
}

// ---------------------------------------------------------------- harmonic

std::vector<PropertyResult> harmonic_properties(const PropertyConfig& config)
{
    std::vector<PropertyResult> out;

    Tally factor("gap_factorization");
    Tally increasing("gap_increasing");
    Tally in_a("gap_nondecreasing_in_a");
    for (int m : {1, 2, 4}) {
        for (double k : {0.0, 0.5, 1.0}) {
            for (double p : {0.5, 1.0, 2.0, 3.0}) {
                for (double a : {0.0, 0.4, 0.8, 0.95}) {
                    const RadiusParams params{p, k, m, a};
                    double previous = -2.0;
                    for (int i = 0; i < 1000; ++i) {
                        const double r = i / 1000.0;
                        const double gap = normalized_gap(params, r);
                        const double scale = std::pow(1.0 + a * std::pow(r, m), p) * (1.0 - r);
                        factor.at_most(std::abs(radius_polynomial(params, r) - scale * gap), 1e-12,
                                       [&] { return "r=" + fmt(r); });
                        if (i > 0) {
                            increasing.require(gap > previous, [&] {
                                return "m=" + std::to_string(m) + " p=" + fmt(p) + " a=" + fmt(a) + " r=" + fmt(r);
                            });
                        }
                        previous = gap;
                    }
                }
                if (p > 2.0) {
                    continue;
                }
                const double root = uniform_harmonic_radius({p, k, m, 0.0});
                for (double r : {0.25 * root, 0.5 * root, root}) {
                    double previous = -2.0;
                    for (int i = 0; i <= 1000; ++i) {
                        const double a = i / 1000.0;
                        const double gap = normalized_gap({p, k, m, a}, r);
                        in_a.at_most(previous, gap + 1e-12, [&] { return "a=" + fmt(a) + " r=" + fmt(r); });
                        in_a.at_most(gap, 1e-12, [&] { return "a=" + fmt(a) + " r=" + fmt(r); });
                        previous = gap;
                    }
                }
            }
        }
    }
    out.push_back(factor.result());
    out.push_back(increasing.result());
    out.push_back(in_a.result());

    Tally identity("extremal_identity");
    Tally sharp("harmonic_radius_sharpness");
    for (int m : {1, 2}) {
        for (double p : {0.5, 1.0, 1.5, 2.0}) {
            for (double k : {0.0, 0.5, 1.0}) {
                for (double a : {0.0, 0.3, 0.6, 0.9}) {
                    const RadiusParams params{p, k, m, a};
                    for (double r : {0.1, 0.3, 0.5}) {
                        identity.at_most(extremal_identity_residual(params, r, config.order), 1e-10,
                                         [&] { return "r=" + fmt(r); });
                    }
                    const double predicted = harmonic_radius(params);
                    const auto b = extremal_crossover(params, 0.0, 0.5 * (1.0 + predicted), config.order);
                    sharp.at_most(std::abs(b.mid() - predicted), 1e-7, [&] {
                        return "m=" + std::to_string(m) + " p=" + fmt(p) + " k=" + fmt(k) + " a=" + fmt(a);
                    });
                }
            }
        }
    }
    out.push_back(identity.result());
    out.push_back(sharp.result());

    const std::vector<std::string> names = {"refined_majorant_random", "coanalytic_majorant_random",
                                            "coanalytic_norm_random", "harmonic_radius_random",
                                            "harmonic_corollaries_random"};
    auto random_part = sampled(scaled(40, config), names, [&](std::size_t i) {
        auto t = tallies_for(names);
        const auto seed = derive_seed(config.seed, 50, i);
        Rng rng(seed);
        const double k = std::array{0.3, 0.7, 1.0}[i % 3];
        const auto h = random_blaschke(1 + rng.below(5), derive_seed(seed, 1, 0), config.order);
        const auto w = random_blaschke(rng.below(4), derive_seed(seed, 2, 0), config.order);
        const auto pair = dilatation_pair(h, w, k);
        const double validity = coanalytic_validity_radius(pair);
        const auto label = [&] { return "pair " + std::to_string(i); };
        for (int j = 1; j <= 8; ++j) {
            const double r = 0.1 * j;
            t[2].require(check_coanalytic_norm(pair, r).verdict == Verdict::Holds, label);
            if (r > validity) {
                continue;
            }
            t[0].require(check_refined_majorant_bound(pair, r).verdict == Verdict::Holds, label);
            t[1].require(check_coanalytic_majorant(pair, r).verdict == Verdict::Holds, label);
        }
        for (int m : {1, 2}) {
            for (double p : {1.0, 2.0}) {
                const RadiusParams params{p, k, m, 0.0};
                const auto rep = verify_harmonic_radius(params, pair);
                if (rep.side_condition != SideCondition::Unmet) {
                    t[3].require(rep.verdict == Verdict::Holds, label);
                }
                for (auto which : {HarmonicCorollary::Uniform, HarmonicCorollary::Limit, HarmonicCorollary::Infimum}) {
                    const auto c = verify_harmonic_corollary(which, params, pair);
                    if (c.side_condition != SideCondition::Unmet) {
                        t[4].require(c.verdict == Verdict::Holds, [&] { return label() + " " + c.check; });
                    }
                }
            }
        }
        return results_of(t);
    });
    out.insert(out.end(), random_part.begin(), random_part.end());

    Tally chain("limit_radius_chain");
    for (double p : {0.5, 1.0, 1.5, 2.0}) {
        for (double k : {0.0, 0.5, 1.0}) {
            for (int i = 0; i < 100; ++i) {
                const double a = i / 100.0;
                chain.at_most(limit_harmonic_radius_infimum(p, k), limit_harmonic_radius({p, k, 1, a}) + 1e-9,
                              [&] { return "p=" + fmt(p) + " k=" + fmt(k) + " a=" + fmt(a); });
            }
        }
    }
    out.push_back(chain.result());
    return out;
}

// ---------------------------------------------------------------- oracle

PropertyResult oracle_equivalence_property(const PropertyConfig& config)
{
    Tally t("oracle_equivalence");
    const std::size_t order = config.order;

    for (double a : {0.0, 0.3, 0.5, 0.8, 0.95}) {
        compare_with_oracle(t, "automorphism a=" + fmt(a), disk_automorphism(a, order),
                            [a](LongComplex z) { return automorphism_value(a, z); });
    }
    for (double a : {0.3, 0.6, 0.75, 0.9}) {
        const long double al = a;
        compare_with_oracle(t, "subordinate square a=" + fmt(a), subordinate_square(a, order), [al](LongComplex z) {
            const LongComplex m = (z - al) / (1.0L - al * z);
            return z * z * m * m;
        });
    }
    for (std::size_t q : {0u, 1u, 2u, 5u}) {
        for (double a : {0.0, 0.5, 1.0 / std::numbers::sqrt2}) {
            const Complex b(0.6, -0.5);
            compare_with_oracle(t, "monomial q=" + std::to_string(q), monomial_times_automorphism(q, b, a, order),
                                [=](LongComplex z) {
                                    return widen(b) * std::pow(z, static_cast<int>(q)) * automorphism_value(a, z);
                                });
        }
    }
    for (double a : {0.2, 0.7}) {
        for (double k : {0.0, 0.5, 1.0}) {
            const auto pair = extremal_harmonic(a, k, order);
            compare_with_oracle(t, "extremal h", pair.h, [a](LongComplex z) { return automorphism_value(a, z); });
            compare_with_oracle(t, "extremal g", pair.g, [a, k](LongComplex z) {
                return static_cast<long double>(k) * (automorphism_value(a, z) - static_cast<long double>(a));
            });
        }
    }
    for (double a : {0.4, 0.9}) {
        const auto zw = monomial_times_automorphism(1, 1.0, a, order);
        compare_with_oracle(t, "squared product a=" + fmt(a), cauchy_product(zw, zw), [a](LongComplex z) {
            const LongComplex v = z * automorphism_value(a, z);
            return v * v;
        });
    }

    const std::size_t samples = scaled(20, config);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto seed = derive_seed(config.seed, 60, i);
        const auto b = random_blaschke_product(i % 9, seed);
        compare_with_oracle(t, "blaschke " + std::to_string(i), class_b_series(b, order),
                            [&b](LongComplex z) { return b(z); });

        const auto triple = random_quasi_triple(derive_seed(config.seed, 61, i), order);
        const auto f = quasi_compose(triple.phi_series(order), triple.g, triple.w_series(order));
        compare_with_oracle(t, "quasi triple " + std::to_string(i), f, [&triple](LongComplex z) {
            const LongComplex w = z * triple.inner(z);
            return triple.phi(z) * horner(triple.g, w);
        });

        // g' = k w h' for a constructed pair, against the closed-form derivative.
        const double k = 0.25 + 0.25 * static_cast<double>(i % 3);
        const auto hb = random_blaschke_product(1 + i % 4, derive_seed(seed, 1, 0));
        const auto wb = random_blaschke_product(i % 3, derive_seed(seed, 2, 0));
        const auto pair = dilatation_pair(class_b_series(hb, order), class_b_series(wb, order), k);
        compare_with_oracle(t, "dilatation pair " + std::to_string(i), derivative(pair.g),
                            [&hb, &wb, k](LongComplex z) {
                                return static_cast<long double>(k) * wb(z) * blaschke_derivative(hb, z);
                            });
    }

    // Derivative against a finite-difference oracle; the stencil divides
    // rounding by its step, so a smaller degree and radius keep that in check.
    for (double b : {0.5, 1.0 / std::numbers::sqrt2}) {
        const auto f = monomial_times_automorphism(1, 1.0, b, order);
        const Evaluator fz = [b](LongComplex z) { return z * automorphism_value(b, z); };
        compare_with_oracle(t, "derivative b=" + fmt(b), derivative(f),
                            [fz](LongComplex z) { return stencil_derivative(fz, z, 1e-4L); }, 0.6, 24);
    }
    return t.result();
}

std::vector<PropertyResult> oracle_properties(const PropertyConfig& config)
{
    std::vector<PropertyResult> out;
    out.push_back(oracle_equivalence_property(config));

    Tally self("dft_reevaluation");
    Tally modulus("grid_modulus");
    Tally dil("dilatation_bound");
    for (std::size_t i = 0; i < scaled(20, config); ++i) {
        const auto b = random_blaschke_product(1 + i % 8, derive_seed(config.seed, 70, i));
        const Evaluator f = [&b](LongComplex z) { return b(z); };
        for (double rho : {0.5, 0.7}) {
            const auto c = dft_coefficients(f, rho, kOracleDegree);
            double worst = 0.0;
            for (int j = 0; j < 64; ++j) {
                const Complex z = std::polar(rho, 2.0 * std::numbers::pi * j / 64.0);
                const auto exact = b(widen(z));
                const Complex e(static_cast<double>(exact.real()), static_cast<double>(exact.imag()));
                worst = std::max(worst, std::abs(c.evaluate_truncated(z) - e));
            }
            self.at_most(worst, 1e-9, [&] { return "sample " + std::to_string(i) + " rho=" + fmt(rho); });
        }
        modulus.at_most(grid_modulus_check(f, 0.99, 512), 1.0 + 1e-12, [&] { return "blaschke " + std::to_string(i); });
    }
    for (double a : {0.0, 0.3, 0.6, 0.9}) {
        for (double r : {0.3, 0.6, 0.9}) {
            const double m = grid_modulus_check([a](LongComplex z) { return automorphism_value(a, z); }, r, 200);
            modulus.at_most(std::abs(m - (r + a) / (1.0 + a * r)), 1e-10, [&] { return "automorphism a=" + fmt(a); });
        }
    }
    modulus.require(grid_modulus_check([](LongComplex z) { return 1.1L * z; }, 0.95, 64) > 1.0,
                    [] { return "non-member not detected"; });

    for (double a : {0.0, 0.5, 0.9}) {
        for (double k : {0.0, 0.4, 1.0}) {
            const auto pair = extremal_harmonic(a, k, config.order);
            for (double r : {0.3, 0.6, 0.9}) {
                const auto d = dilatation_check(pair, r, 256);
                dil.at_most(std::abs(d.max_ratio - k), 1e-10, [&] { return "extremal a=" + fmt(a) + " k=" + fmt(k); });
            }
        }
    }
    for (std::size_t i = 0; i < scaled(10, config); ++i) {
        const auto seed = derive_seed(config.seed, 71, i);
        const double k = 0.7;
        const auto pair = dilatation_pair(random_blaschke(1 + i % 4, derive_seed(seed, 1, 0), config.order),
                                          random_blaschke(i % 3, derive_seed(seed, 2, 0), config.order), k);
        const auto s = sample_membership(pair);
        dil.require(s.member, [&] { return "constructed pair " + std::to_string(i) + " ratio " + fmt(s.max_ratio); });
    }
    out.push_back(self.result());
    out.push_back(modulus.result());
    out.push_back(dil.result());
    return out;
}

// ---------------------------------------------------------------- registry

const std::vector<std::string_view>& property_suite_names()
{
    static const std::vector<std::string_view> names = {"lemmas", "radii", "quasisub", "harmonic", "oracle"};
    return names;
}

std::vector<PropertyResult> run_property_suite(std::string_view suite, const PropertyConfig& config)
{
    if (suite == "lemmas") {
        return lemma_properties(config);
    }
    if (suite == "radii") {
        return radii_properties(config);
    }
    if (suite == "quasisub") {
        return quasisub_properties(config);
    }
    if (suite == "harmonic") {
        return harmonic_properties(config);
    }
    if (suite == "oracle") {
        return oracle_properties(config);
    }
    throw ParamOutOfRange("unknown property suite: " + std::string(suite));
}

} // namespace bohr
