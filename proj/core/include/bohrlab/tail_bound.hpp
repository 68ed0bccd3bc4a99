#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace bohr {

// Bound on the part of a power series that a TruncatedSeries of order N does
// not store. For every radius r in [0, 1):
//
//   sum(r)    >= sum_{n>N} |c_n| r^n
//   sq_sum(r) >= sum_{n>N} |c_n|^2 r^(2n)
//   cap()     >= sup_{n>N} |c_n|          (+inf when no uniform bound is known)
//
// A bound is an immutable expression tree that is evaluated lazily at the
// query radius, so products and compositions keep a valid (and usually tight)
// estimate without committing to a uniform coefficient cap. Copies share the
// tree.
//
// All bounds are computed from sums of nonnegative terms only, so rounding
// perturbs them by a relative O(N * eps); they are certified up to that.
class TailBound {
public:
    class Node;

    // The zero tail (polynomials).
    TailBound();

    // |c_n| <= cap for all n > order. The classical model.
    static TailBound uniform(double cap, std::size_t order);

    // Tail of a product f*g truncated at `order`, from the stored moduli of f
    // and g (entries 0..order) and their tails.
    static TailBound product(std::span<const double> abs_f, const TailBound& tail_f,
                             std::span<const double> abs_g, const TailBound& tail_g);

    // Tail of g(w(z)) truncated at `order` where w(0) = 0. `abs_powers[k]`
    // holds the first order+1 coefficients of |w|^k (the majorant series of w
    // raised to the k-th power), k = 0..order.
    static TailBound composition(std::span<const double> abs_g, const TailBound& tail_g,
                                 std::vector<std::vector<double>> abs_powers,
                                 const TailBound& tail_w);

    // Discarded stored coefficients: `dropped` holds |c_n| for n = first..first+len-1,
    // and `rest` bounds everything beyond.
    static TailBound explicit_terms(std::size_t first, std::vector<double> dropped,
                                    const TailBound& rest);

    double sum(double r) const;
    double sq_sum(double r) const;
    double cap() const;
    bool is_zero() const;

    // Combinators. `order` arguments refer to the series the bound belongs to.
    TailBound scaled(double factor) const;
    TailBound shifted(std::size_t q) const;
    TailBound plus(const TailBound& other) const;
    TailBound intersect(const TailBound& other) const;
    TailBound derivative(std::size_t order) const;
    TailBound antiderivative(std::size_t order) const;

private:
    explicit TailBound(std::shared_ptr<const Node> node);

    std::shared_ptr<const Node> node_;
};

} // namespace bohr
