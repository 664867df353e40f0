#pragma once

#include <cstdint>

#include "lowcap/bounds.hpp"

namespace lowcap {

struct BecQuery {
    double epsilon;  // erasure probability in (0,1)
    uint32_t n;      // blocklength
    double pe;       // target block error probability in (0,1)

    double kappa() const { return static_cast<double>(n) * (1.0 - epsilon); }
};

BecQuery make_bec_query(double epsilon, uint32_t n, double pe);

// Poisson-mixture terms behind the low-capacity BEC bounds. Both are
// nondecreasing in log2_m; all internal tail sums run in the log2 domain.
double frak_p1(double log2_m, double kappa);
double frak_p2(double log2_m, double kappa);

// Poisson-approximation error coefficient; depends on epsilon and kappa.
double alpha_coeff(double epsilon, double kappa);

// Code-size bounds solved from the frak_p1 / frak_p2 fixed-point equations by
// bisection over log2 M in [0, n] (tolerance 1e-6, reported in metadata).
// Throws numerical_error("pe unreachable") when no code size fits.
BoundResult bec_theorem_achievable(const BecQuery& q);
BoundResult bec_theorem_converse(const BecQuery& q);

// Raw finite-n bounds the estimates above track: block error probability of
// the random-coding union bound and of the erasure-counting converse.
double bec_rcu_raw_pe(uint32_t n, double epsilon, double log2_m);
double bec_converse_raw_pe(uint32_t n, double epsilon, double log2_m);

// Two-term normal approximation nC - sqrt(nV) Q^{-1}(pe); the order term is
// dropped and the result is clamped at zero.
BoundResult bec_normal_approx(const BecQuery& q);

// Smallest blocklengths at which the bounds reach k bits.
BlocklengthInterval bec_blocklength_interval(uint32_t k, double epsilon, double pe);
uint32_t bec_rcu_blocklength(uint32_t k, double epsilon, double pe);
uint32_t bec_raw_converse_blocklength(uint32_t k, double epsilon, double pe);
uint32_t bec_normal_approx_blocklength(uint32_t k, double epsilon, double pe);

} // namespace lowcap
