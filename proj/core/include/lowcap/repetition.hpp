#pragma once

#include <cstdint>
#include <utility>

namespace lowcap {

// A repetition layout n = r * outer_len plus the capacity-retention analysis
// that produced it.
struct RepetitionPlan {
    uint32_t n = 0;
    uint32_t r = 1;           // repetition factor, divides n
    uint32_t outer_len = 0;   // n / r
    double beta = 0.0;        // requested retained-capacity fraction
    double beta_achieved = 0.0;
    double m_exact = 0.0;     // real solution of the retention equation
    double m_lower = 0.0;     // closed-form bracket on the outer length
    double m_upper = 0.0;
};

// Erasure probability of the r-fold repetition channel: epsilon^r.
double bec_repeated_channel(double epsilon, uint32_t r);

// The real m solving m (1 - epsilon^{n/m}) = beta n (1 - epsilon); the
// minimum number of outer blocks retaining a beta fraction of capacity.
double exact_outer_blocks_bec(uint32_t n, double epsilon, double beta);

// Closed-form bracket (m_lower, m_upper) on the outer length n/r_beta.
std::pair<double, double> theorem_bracket(uint32_t n, double epsilon, double beta);

// Universal floor kappa beta^2 / (2 (1-beta)) on the outer length for any
// binary memoryless symmetric channel of the given capacity (the erasure
// channel is the extremal case; the vanishing correction is reported as 1).
double bms_repetition_floor(uint32_t n, double cap, double beta);

// Largest power-of-two repetition factor whose total rate loss stays O(1),
// operationalized through the exact solve at beta = 1 - 1/kappa.
uint32_t negligible_loss_repetition(uint32_t n, double kappa);

// Full plan for a BEC query: exact solve, bracket, and the power-of-two
// rounding the planner applies (outer length rounded down to a power-of-two
// divisor of n; the achieved beta records the induced slack).
RepetitionPlan plan_bec_repetition(uint32_t n, double epsilon, double beta);

} // namespace lowcap
