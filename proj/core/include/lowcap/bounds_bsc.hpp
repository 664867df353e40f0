#pragma once

#include <cstdint>

#include "lowcap/bounds.hpp"

namespace lowcap {

struct BscQuery {
    double delta; // crossover probability in (0, 0.5)
    uint32_t n;
    double pe;

    double cap() const;
    double kappa() const { return static_cast<double>(n) * cap(); }
    // kappa*sqrt(kappa)/n; large values mean the low-capacity expansion is
    // being stretched beyond the regime it was derived for.
    double low_capacity_strain() const;
};

BscQuery make_bsc_query(double delta, uint32_t n, double pe);

// Expansion kappa - 2 sqrt(2 d(1-d)/ln2) sqrt(kappa) Q^{-1}(pe)
// + (1/2) log2 kappa - log2 pe, order term dropped.
BoundResult bsc_theorem_log2m(const BscQuery& q);

// Closed-form optimal blocklength for k bits (order term dropped, rounded up).
uint32_t bsc_corollary_blocklength(uint32_t k, double delta, double pe);

// RCU block error bound: sum_r C(n,r) d^r (1-d)^{n-r} min{1, (M-1) S_n^r}
// with S_n^r the half-space prefix sums, accumulated once in log domain.
double bsc_rcu_raw_pe(uint32_t n, double delta, double log2_m);

// Hypothesis-testing converse: -log2 of the interpolated beta at 1-pe.
BoundResult bsc_metaconverse_log2m(uint32_t n, double delta, double pe);

// Three-term normal approximation nC - sqrt(nV) Q^{-1}(pe) + (1/2) log2 n.
BoundResult bsc_normal_approx(const BscQuery& q);

uint32_t bsc_theorem_blocklength(uint32_t k, double delta, double pe);
uint32_t bsc_rcu_blocklength(uint32_t k, double delta, double pe);
uint32_t bsc_metaconverse_blocklength(uint32_t k, double delta, double pe);
uint32_t bsc_normal_approx_blocklength(uint32_t k, double delta, double pe);

} // namespace lowcap
