#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lowcap {

// Log-likelihood ratio ln(P(y|0)/P(y|1)); +/-inf mark certain bits on the
// erasure channel, 0 marks an erasure.
using Llr = double;

struct Bec {
    double epsilon; // erasure probability in (0,1)
};
struct Bsc {
    double delta; // crossover probability in (0,0.5)
};
struct Biawgn {
    double sigma; // noise standard deviation, unit-energy BPSK
};

using ChannelModel = std::variant<Bec, Bsc, Biawgn>;

ChannelModel make_bec(double epsilon);
ChannelModel make_bsc(double delta);
ChannelModel make_biawgn_sigma(double sigma);

std::string channel_name(const ChannelModel& ch);
double channel_parameter(const ChannelModel& ch);

// Deterministic counter-based stream: equal (master_seed, stream_index)
// reproduces the identical draw sequence regardless of what other streams do.
class RngStream {
public:
    RngStream(uint64_t master_seed, uint64_t stream_index);

    uint64_t next_u64();
    double next_uniform();  // [0, 1)
    double next_gaussian(); // standard normal, Box-Muller

    uint64_t master_seed() const { return master_seed_; }
    uint64_t stream_index() const { return stream_index_; }

private:
    uint64_t master_seed_;
    uint64_t stream_index_;
    uint64_t key_;
    uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Binary-input capacity in [0,1]. BEC/BSC are closed form; BIAWGN integrates
// the BPSK mutual information with 64-point Gauss-Hermite quadrature.
double capacity(const ChannelModel& ch);

// Real-input AWGN capacity 0.5*log2(1+eta), exposed for the AWGN bound
// queries which are stated in terms of the unconstrained-input channel.
double shannon_capacity_real(double eta);

// One use of the channel per codeword bit; LLRs in transmission order.
std::vector<Llr> transmit(const ChannelModel& ch, std::span<const uint8_t> codeword,
                          RngStream& rng);

// Saturating LLR addition: +/-inf absorb finite values; opposite certainties
// cancel to an erasure.
Llr llr_saturating_add(Llr a, Llr b);

// Sum LLRs of the r tiled copies: input has length n = r * (n/r) laid out as
// r consecutive tiles; output has length n/r.
std::vector<Llr> fold_repetition_llrs(std::span<const Llr> llrs, uint32_t r);

// sigma for unit-energy BPSK at the given Eb/N0 (dB) and code rate.
double ebn0_to_sigma(double ebn0_db, double rate);
double sigma_to_ebn0(double sigma, double rate);

} // namespace lowcap
