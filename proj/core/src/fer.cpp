#include "lowcap/fer.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "lowcap/errors.hpp"

namespace lowcap {

std::pair<double, double> wilson_interval(uint64_t errors, uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054; // 97.5% normal quantile
    double n = static_cast<double>(trials);
    double p = static_cast<double>(errors) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// One self-contained trial; everything it consumes comes from its stream.
bool trial_fails(const PolarSpec& spec, const PolarSpec& inner, uint32_t factor,
                 const ChannelModel& ch, uint32_t list_size, RngStream rng) {
    std::vector<uint8_t> payload(spec.k_payload());
    for (auto& b : payload) b = rng.next_uniform() < 0.5 ? 0 : 1;

    std::vector<uint8_t> tile = encode(inner, payload);
    std::vector<uint8_t> codeword;
    if (factor == 1) {
        codeword = std::move(tile);
    } else {
        codeword.reserve(spec.n());
        for (uint32_t t = 0; t < factor; ++t) {
            codeword.insert(codeword.end(), tile.begin(), tile.end());
        }
    }

    auto llrs = transmit(ch, codeword, rng);
    DecodeResult res;
    if (factor == 1) {
        res = scl_decode(inner, llrs, list_size);
    } else {
        auto folded = fold_repetition_llrs(llrs, factor);
        res = scl_decode(inner, folded, list_size);
    }
    return res.payload != payload;
}

} // namespace

FerPoint estimate_fer(const PolarSpec& spec, const ChannelModel& ch, uint32_t list_size,
                      const StopRule& stop, uint64_t seed, unsigned workers,
                      std::optional<double> futility_target) {
    if (stop.min_errors == 0) throw domain_error("estimate_fer: min_errors must be positive");
    if (stop.batch == 0) throw domain_error("estimate_fer: batch must be positive");
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }

    // The repetition structure makes the tiled fast path bit-exact with the
    // direct one, so every trial runs on the inner code.
    uint32_t factor = implicit_repetition_factor(spec);
    PolarSpec inner = inner_spec(spec);

    FerPoint pt;
    pt.channel = ch;
    pt.spec_digest = polar_spec_digest(spec);
    pt.list_size = list_size;
    pt.master_seed = seed;

    uint64_t trials = 0;
    uint64_t errors = 0;
    while (true) {
        uint64_t batch = std::min<uint64_t>(stop.batch, stop.max_trials - trials);
        if (batch == 0) break;
        std::atomic<uint64_t> next{0};
        std::atomic<uint64_t> batch_errors{0};
        auto work = [&]() {
            uint64_t local = 0;
            for (uint64_t j = next.fetch_add(1); j < batch; j = next.fetch_add(1)) {
                uint64_t t = trials + j;
                if (trial_fails(spec, inner, factor, ch, list_size, RngStream(seed, t))) {
                    ++local;
                }
            }
            batch_errors.fetch_add(local);
        };
        if (workers == 1 || batch == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            unsigned active = static_cast<unsigned>(std::min<uint64_t>(workers, batch));
            pool.reserve(active);
            for (unsigned w = 0; w < active; ++w) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        trials += batch;
        errors += batch_errors.load();
        if (errors >= stop.min_errors) break;
        if (futility_target) {
            auto [lo, hi] = wilson_interval(errors, trials);
            (void)hi;
            if (lo > *futility_target) break;
        }
    }

    pt.trials = trials;
    pt.errors = errors;
    pt.fer = trials > 0 ? static_cast<double>(errors) / static_cast<double>(trials) : 0.0;
    auto [lo, hi] = wilson_interval(errors, trials);
    pt.ci_lo = lo;
    pt.ci_hi = hi;
    pt.trials_capped = errors < stop.min_errors && trials >= stop.max_trials;
    return pt;
}

uint32_t find_min_polar_blocklength(const MinBlocklengthQuery& q, const StopRule& stop,
                                    uint64_t seed, unsigned workers) {
    uint32_t k_total = q.k_payload + q.crc_len;
    double cap = capacity(q.channel);
    uint32_t m = q.m_min;
    if (m == 0) {
        double needed = static_cast<double>(k_total) / std::max(cap, 1e-9);
        m = static_cast<uint32_t>(std::ceil(std::log2(std::max(needed, 2.0))));
        while ((1u << m) < 2 * k_total) ++m;
    }
    for (; m <= q.m_max; ++m) {
        PolarSpec spec = construct(q.channel, m, k_total, q.crc_len, q.crc_poly);
        FerPoint pt = estimate_fer(spec, q.channel, q.list_size, stop, seed, workers,
                                   q.pe_target);
        if (pt.ci_hi <= q.pe_target) return 1u << m;
        // Otherwise a miss: confidently above target or unresolved at the cap.
    }
    throw numerical_error("find_min_polar_blocklength: target not reached below m_max");
}

} // namespace lowcap
