#pragma once

#include <cstdint>
#include <functional>

#include "lowcap/log_domain.hpp"

namespace lowcap {

// Which side of the refined Ramanujan factorial bracket to evaluate.
// `lower` (theta1) underestimates s!, hence overestimates Poisson masses;
// it is the default used by all single-number bound evaluations. `upper`
// (theta2) is available for interval-mode evaluation.
enum class RamanujanTheta { lower, upper };

struct FactorialBounds {
    uint64_t s = 0;
    LogDomainValue lower;
    LogDomainValue upper;
};

// Bracket for log2(s!): exact below the crossover s <= 10, refined Ramanujan
// above it. lower == upper on the exact branch.
FactorialBounds factorial_bounds(uint64_t s);

// Point estimate of log2(s!) used by the Poisson routines (theta per flag).
double log2_factorial(uint64_t s, RamanujanTheta theta = RamanujanTheta::lower);

// log2 of the Poisson mass e^{-lambda} lambda^s / s!. Exact factorial for
// s <= 10, Ramanujan above. Rejects lambda <= 0.
double log2_poisson_pmf(double lambda, uint64_t s,
                        RamanujanTheta theta = RamanujanTheta::lower);
double poisson_pmf(double lambda, uint64_t s,
                   RamanujanTheta theta = RamanujanTheta::lower);

// Pr{X < x} for X ~ Poisson(lambda), strict: an integer x excludes the mass
// at x itself. Returns 0 for x <= 0. Tail sums are truncated at
// lambda + 40*sqrt(lambda) (residual mass below 1e-12) and accumulated with
// log-sum-exp.
double poisson_cdf_strict(double lambda, double x,
                          RamanujanTheta theta = RamanujanTheta::lower);

// Gaussian tail Q(a) = Pr{N(0,1) > a} and its functional inverse.
double q_func(double a);
double q_inv(double p); // rejects p outside (0,1)

// h2(x) = -x log2 x - (1-x) log2 (1-x), with h2(0) = h2(1) = 0.
double binary_entropy(double x); // rejects x outside [0,1]

// log2 C(n, r); rejects r < 0 or r > n. Symmetric in r <-> n-r exactly.
LogDomainValue log2_binomial(uint64_t n, int64_t r);

// Root of a monotone f on [lo, hi] by bisection; stops once the bracket is
// narrower than tol. Throws numerical_error when f(lo), f(hi) do not
// straddle zero.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol);

} // namespace lowcap
