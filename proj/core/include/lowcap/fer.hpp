#pragma once

#include <cstdint>
#include <optional>

#include "lowcap/channel.hpp"
#include "lowcap/polar.hpp"

namespace lowcap {

struct StopRule {
    uint64_t min_errors = 100;
    uint64_t max_trials = 10'000'000;
    uint64_t batch = 1024; // stop conditions checked at batch boundaries only
};

struct FerPoint {
    ChannelModel channel = Bec{0.5};
    uint64_t spec_digest = 0;
    uint32_t list_size = 1;
    uint64_t trials = 0;
    uint64_t errors = 0;
    double fer = 0.0;
    double ci_lo = 0.0; // 95% Wilson interval
    double ci_hi = 1.0;
    uint64_t master_seed = 0;
    bool trials_capped = false; // max_trials hit before min_errors
};

// 95% Wilson score interval for `errors` failures in `trials`.
std::pair<double, double> wilson_interval(uint64_t errors, uint64_t trials);

// Independent trials payload -> encode -> transmit -> list-decode -> compare;
// trial t draws everything from RngStream(seed, t), so the outcome is a pure
// function of (spec, channel, L, seed, stop) regardless of worker count.
// `futility_target`: give up once the 95% lower bound exceeds it.
FerPoint estimate_fer(const PolarSpec& spec, const ChannelModel& ch, uint32_t list_size,
                      const StopRule& stop, uint64_t seed, unsigned workers = 0,
                      std::optional<double> futility_target = std::nullopt);

// Channel family parameterized for the blocklength search: the member
// channel is fixed; codes are constructed per m with k_payload + crc_len
// information positions.
struct MinBlocklengthQuery {
    ChannelModel channel = Bec{0.5};
    uint32_t k_payload = 40;
    uint32_t crc_len = 6;
    uint64_t crc_poly = kDefaultCrcPoly;
    uint32_t list_size = 16;
    double pe_target = 1e-2;
    uint32_t m_min = 0;  // 0: derived from k and capacity
    uint32_t m_max = 20;
};

// Smallest power-of-two n whose Wilson upper bound lands at or below the
// target error rate.
uint32_t find_min_polar_blocklength(const MinBlocklengthQuery& q, const StopRule& stop,
                                    uint64_t seed, unsigned workers = 0);

} // namespace lowcap
