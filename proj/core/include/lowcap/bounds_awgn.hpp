#pragma once

#include <cstdint>
#include <utility>

#include "lowcap/bounds.hpp"

namespace lowcap {

struct AwgnQuery {
    double eta; // SNR, linear power ratio
    uint32_t n;
    double pe;

    double kappa() const;
};

AwgnQuery make_awgn_query(double eta, uint32_t n, double pe);

// Two-sided bracket for log2 M*: base = kappa - sqrt(eta+2)/((eta+1) sqrt(ln2))
// * sqrt(kappa) Q^{-1}(pe); the pair is (base, base + (1/2) log2 kappa
// - log2 pe). The unknown O(1) summands are represented as zero and flagged
// in the metadata.
std::pair<BoundResult, BoundResult> awgn_theorem_interval(const AwgnQuery& q);

// Closed-form optimal blocklength for k bits (order term dropped, rounded up).
uint32_t awgn_corollary_blocklength(uint32_t k, double eta, double pe);

// Minimum Eb/N0 (dB) for reliable transmission at the given rate:
// solves R = (1/2) log2(1 + 2 R Eb/N0), i.e. Eb/N0 = (2^{2R} - 1) / (2R).
double shannon_limit_ebn0(double rate);

} // namespace lowcap
