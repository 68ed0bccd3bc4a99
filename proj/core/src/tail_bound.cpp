#include "bohrlab/tail_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace bohr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 0 * inf is 0 here: a vanishing coefficient contributes nothing regardless
// of how badly the matching tail diverges.
double times(double a, double b)
{
    return (a == 0.0 || b == 0.0) ? 0.0 : a * b;
}

std::vector<double> powers_of(double r, std::size_t count)
{
    std::vector<double> out(count);
    double x = 1.0;
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = x;
        x *= r;
    }
    return out;
}

} // namespace

class TailBound::Node {
public:
    virtual ~Node() = default;
    virtual double sum(double r) const = 0;
    virtual double sq_sum(double r) const
    {
        const double s = sum(r);
        return s * s;
    }
    virtual double cap() const = 0;
    virtual bool is_zero() const { return false; }
};

namespace {

using Node = TailBound::Node;
using NodePtr = std::shared_ptr<const Node>;

class ZeroNode final : public Node {
public:
    double sum(double) const override { return 0.0; }
    double sq_sum(double) const override { return 0.0; }
    double cap() const override { return 0.0; }
    bool is_zero() const override { return true; }
};

const NodePtr& zero_node()
{
    static const NodePtr node = std::make_shared<ZeroNode>();
    return node;
}

class UniformNode final : public Node {
public:
    UniformNode(double cap, std::size_t order) : cap_(cap), order_(order) {}

    double sum(double r) const override
    {
        if (r >= 1.0) {
            return kInf;
        }
        return cap_ * std::pow(r, static_cast<double>(order_ + 1)) / (1.0 - r);
    }

    double sq_sum(double r) const override
    {
        if (r >= 1.0) {
            return kInf;
        }
        return cap_ * cap_ * std::pow(r, 2.0 * static_cast<double>(order_ + 1)) / (1.0 - r * r);
    }

    double cap() const override { return cap_; }

private:
    double cap_;
    std::size_t order_;
};

// Pairs (i, j) with i + j > N are either (i <= N, j >= N - i + 1) or (i > N, any j).
class ProductNode final : public Node {
public:
    ProductNode(std::vector<double> abs_f, TailBound tail_f, std::vector<double> abs_g, TailBound tail_g)
        : abs_f_(std::move(abs_f)), abs_g_(std::move(abs_g)), tail_f_(std::move(tail_f)),
          tail_g_(std::move(tail_g))
    {
        cap_ = compute_cap();
    }

    double sum(double r) const override
    {
        const std::size_t n = abs_f_.size();
        const auto rp = powers_of(r, n);
        // g_suffix[m] = sum_{j >= m} |g_j| r^j including the tail, m = 0..n.
        std::vector<double> g_suffix(n + 1);
        g_suffix[n] = tail_g_.sum(r);
        for (std::size_t j = n; j-- > 0;) {
            g_suffix[j] = g_suffix[j + 1] + abs_g_[j] * rp[j];
        }
        double total = times(tail_f_.sum(r), g_suffix[0]);
        for (std::size_t i = 0; i < n; ++i) {
            total += times(abs_f_[i] * rp[i], g_suffix[n - i]);
        }
        return total;
    }

    double cap() const override { return cap_; }

private:
    double compute_cap() const
    {
        const double mf = tail_f_.cap();
        const double mg = tail_g_.cap();
        if (mf > 0.0 && mg > 0.0) {
            return kInf;
        }
        const std::size_t n = abs_f_.size();
        double known = 0.0;
        for (std::size_t k = n; k + 1 < 2 * n; ++k) {
            double c = 0.0;
            for (std::size_t i = k - (n - 1); i < n; ++i) {
                c += abs_f_[i] * abs_g_[k - i];
            }
            known = std::max(known, c);
        }
        double sum_f = 0.0;
        double sum_g = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sum_f += abs_f_[i];
            sum_g += abs_g_[i];
        }
        return known + times(mg, sum_f) + times(mf, sum_g);
    }

    std::vector<double> abs_f_;
    std::vector<double> abs_g_;
    TailBound tail_f_;
    TailBound tail_g_;
    double cap_ = kInf;
};

// tail(g o w) <= sum_{k=1}^{N} |g_k| tau_k(r) + tail_g(W(r)), where tau_k bounds
// the part of |w|^k beyond N and W(r) bounds the full majorant of w.
class CompositionNode final : public Node {
public:
    CompositionNode(std::vector<double> abs_g, TailBound tail_g, std::vector<std::vector<double>> abs_powers,
                    TailBound tail_w)
        : abs_g_(std::move(abs_g)), powers_(std::move(abs_powers)), tail_g_(std::move(tail_g)),
          tail_w_(std::move(tail_w))
    {
    }

    double sum(double r) const override
    {
        const std::size_t n = abs_g_.size();
        const auto rp = powers_of(r, n);
        const auto& abs_w = powers_[1];
        std::vector<double> w_suffix(n + 1);
        w_suffix[n] = tail_w_.sum(r);
        for (std::size_t j = n; j-- > 0;) {
            w_suffix[j] = w_suffix[j + 1] + abs_w[j] * rp[j];
        }
        const double w_full = w_suffix[0];

        double total = times(abs_g_.size() > 1 ? abs_g_[1] : 0.0, w_suffix[n]);
        double tau = w_suffix[n];
        // Rows past powers_.size() - 1 are only omitted when g has no
        // coefficients there and no tail.
        for (std::size_t k = 2; k < n && k < powers_.size(); ++k) {
            const auto& prev = powers_[k - 1];
            double next = times(tau, w_full);
            for (std::size_t i = k - 1; i < n; ++i) {
                next += times(prev[i] * rp[i], w_suffix[n - i]);
            }
            tau = next;
            total += times(abs_g_[k], tau);
        }
        if (!tail_g_.is_zero()) {
            total += tail_g_.sum(w_full);
        }
        return total;
    }

    double cap() const override { return kInf; }

private:
    std::vector<double> abs_g_;
    std::vector<std::vector<double>> powers_;
    TailBound tail_g_;
    TailBound tail_w_;
};

class ExplicitNode final : public Node {
public:
    ExplicitNode(std::size_t first, std::vector<double> dropped, TailBound rest)
        : first_(first), dropped_(std::move(dropped)), rest_(std::move(rest))
    {
    }

    double sum(double r) const override
    {
        double total = rest_.sum(r);
        double x = std::pow(r, static_cast<double>(first_));
        for (double d : dropped_) {
            total += d * x;
            x *= r;
        }
        return total;
    }

    double sq_sum(double r) const override
    {
        double total = rest_.sq_sum(r);
        const double r2 = r * r;
        double x = std::pow(r2, static_cast<double>(first_));
        for (double d : dropped_) {
            total += d * d * x;
            x *= r2;
        }
        return total;
    }

    double cap() const override
    {
        double c = rest_.cap();
        for (double d : dropped_) {
            c = std::max(c, d);
        }
        return c;
    }

private:
    std::size_t first_;
    std::vector<double> dropped_;
    TailBound rest_;
};

class ScaledNode final : public Node {
public:
    ScaledNode(double factor, TailBound child) : factor_(factor), child_(std::move(child)) {}
    double sum(double r) const override { return factor_ * child_.sum(r); }
    double sq_sum(double r) const override { return factor_ * factor_ * child_.sq_sum(r); }
    double cap() const override { return factor_ * child_.cap(); }

private:
    double factor_;
    TailBound child_;
};

class ShiftedNode final : public Node {
public:
    ShiftedNode(std::size_t q, TailBound child) : q_(static_cast<double>(q)), child_(std::move(child)) {}
    double sum(double r) const override { return times(std::pow(r, q_), child_.sum(r)); }
    double sq_sum(double r) const override { return times(std::pow(r, 2.0 * q_), child_.sq_sum(r)); }
    double cap() const override { return child_.cap(); }

private:
    double q_;
    TailBound child_;
};

class SumNode final : public Node {
public:
    SumNode(TailBound a, TailBound b) : a_(std::move(a)), b_(std::move(b)) {}
    double sum(double r) const override { return a_.sum(r) + b_.sum(r); }
    double sq_sum(double r) const override
    {
        const double s = std::sqrt(a_.sq_sum(r)) + std::sqrt(b_.sq_sum(r));
        return s * s;
    }
    double cap() const override { return a_.cap() + b_.cap(); }

private:
    TailBound a_;
    TailBound b_;
};

class MinNode final : public Node {
public:
    MinNode(TailBound a, TailBound b) : a_(std::move(a)), b_(std::move(b)) {}
    double sum(double r) const override { return std::min(a_.sum(r), b_.sum(r)); }
    double sq_sum(double r) const override { return std::min(a_.sq_sum(r), b_.sq_sum(r)); }
    double cap() const override { return std::min(a_.cap(), b_.cap()); }

private:
    TailBound a_;
    TailBound b_;
};

// Tail of f' where f has order N >= 1: sum_{n>N} n |c_n| r^(n-1).
class DerivativeNode final : public Node {
public:
    DerivativeNode(TailBound child, std::size_t order) : child_(std::move(child)), order_(order) {}

    double sum(double r) const override
    {
        if (r == 0.0) {
            return 0.0;
        }
        if (r >= 1.0) {
            return kInf;
        }
        const double n = static_cast<double>(order_);
        double best = kInf;
        const double m = child_.cap();
        if (std::isfinite(m)) {
            best = m * std::pow(r, n) * ((n + 1.0) - n * r) / ((1.0 - r) * (1.0 - r));
        }
        // Cauchy-type estimate: n r^(n-1) <= (sup_{n>N} n q^n / r) rho^n with q = r/rho.
        for (double t : {0.05, 0.15, 0.3, 0.5, 0.7, 0.9}) {
            const double rho = r + (1.0 - r) * t;
            const double q = r / rho;
            const double peak = -1.0 / std::log(q);
            const double sup = peak <= n + 1.0 ? (n + 1.0) * std::pow(q, n + 1.0) : peak * std::pow(q, peak);
            best = std::min(best, times(sup / r, child_.sum(rho)));
        }
        return best;
    }

    double cap() const override { return kInf; }

private:
    TailBound child_;
    std::size_t order_;
};

// Tail of the antiderivative of f (order N): sum_{n>N} |c_n| r^(n+1)/(n+1).
class AntiderivativeNode final : public Node {
public:
    AntiderivativeNode(TailBound child, std::size_t order)
        : child_(std::move(child)), inv_(1.0 / static_cast<double>(order + 2))
    {
    }
    double sum(double r) const override { return r * inv_ * child_.sum(r); }
    double sq_sum(double r) const override { return r * r * inv_ * inv_ * child_.sq_sum(r); }
    double cap() const override { return inv_ * child_.cap(); }

private:
    TailBound child_;
    double inv_;
};

} // namespace

TailBound::TailBound() : node_(zero_node()) {}

TailBound::TailBound(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

TailBound TailBound::uniform(double cap, std::size_t order)
{
    if (cap == 0.0) {
        return TailBound();
    }
    return TailBound(std::make_shared<UniformNode>(cap, order));
}

TailBound TailBound::product(std::span<const double> abs_f, const TailBound& tail_f, std::span<const double> abs_g,
                             const TailBound& tail_g)
{
    return TailBound(std::make_shared<ProductNode>(std::vector<double>(abs_f.begin(), abs_f.end()), tail_f,
                                                   std::vector<double>(abs_g.begin(), abs_g.end()), tail_g));
}

TailBound TailBound::composition(std::span<const double> abs_g, const TailBound& tail_g,
                                 std::vector<std::vector<double>> abs_powers, const TailBound& tail_w)
{
    return TailBound(std::make_shared<CompositionNode>(std::vector<double>(abs_g.begin(), abs_g.end()), tail_g,
                                                       std::move(abs_powers), tail_w));
}

TailBound TailBound::explicit_terms(std::size_t first, std::vector<double> dropped, const TailBound& rest)
{
    const bool all_zero = std::all_of(dropped.begin(), dropped.end(), [](double d) { return d == 0.0; });
    if (all_zero) {
        return rest;
    }
    return TailBound(std::make_shared<ExplicitNode>(first, std::move(dropped), rest));
}

double TailBound::sum(double r) const { return node_->sum(r); }
double TailBound::sq_sum(double r) const { return node_->sq_sum(r); }
double TailBound::cap() const { return node_->cap(); }
bool TailBound::is_zero() const { return node_->is_zero(); }

TailBound TailBound::scaled(double factor) const
{
    factor = std::abs(factor);
    if (is_zero() || factor == 0.0) {
        return TailBound();
    }
    if (factor == 1.0) {
        return *this;
    }
    return TailBound(std::make_shared<ScaledNode>(factor, *this));
}

TailBound TailBound::shifted(std::size_t q) const
{
    if (is_zero() || q == 0) {
        return *this;
    }
    return TailBound(std::make_shared<ShiftedNode>(q, *this));
}

TailBound TailBound::plus(const TailBound& other) const
{
    if (is_zero()) {
        return other;
    }
    if (other.is_zero()) {
        return *this;
    }
    return TailBound(std::make_shared<SumNode>(*this, other));
}

TailBound TailBound::intersect(const TailBound& other) const
{
    if (is_zero() || other.is_zero()) {
        return TailBound();
    }
    return TailBound(std::make_shared<MinNode>(*this, other));
}

TailBound TailBound::derivative(std::size_t order) const
{
    if (is_zero()) {
        return *this;
    }
    return TailBound(std::make_shared<DerivativeNode>(*this, order));
}

TailBound TailBound::antiderivative(std::size_t order) const
{
    if (is_zero()) {
        return *this;
    }
    return TailBound(std::make_shared<AntiderivativeNode>(*this, order));
}

} // namespace bohr
