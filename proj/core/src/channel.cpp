#include "lowcap/channel.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "lowcap/errors.hpp"
#include "lowcap/numerics.hpp"

namespace lowcap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.2831853071795864769;

uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

} // namespace

ChannelModel make_bec(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("bec: epsilon must lie in (0,1)");
    return Bec{epsilon};
}

ChannelModel make_bsc(double delta) {
    if (!(delta > 0.0 && delta < 0.5))
        throw domain_error("bsc: delta must lie in (0,0.5)");
    return Bsc{delta};
}

ChannelModel make_biawgn_sigma(double sigma) {
    if (!(sigma > 0.0)) throw domain_error("biawgn: sigma must be positive");
    return Biawgn{sigma};
}

std::string channel_name(const ChannelModel& ch) {
    if (std::holds_alternative<Bec>(ch)) return "bec";
    if (std::holds_alternative<Bsc>(ch)) return "bsc";
    return "biawgn";
}

double channel_parameter(const ChannelModel& ch) {
    if (const auto* b = std::get_if<Bec>(&ch)) return b->epsilon;
    if (const auto* b = std::get_if<Bsc>(&ch)) return b->delta;
    return std::get<Biawgn>(ch).sigma;
}

RngStream::RngStream(uint64_t master_seed, uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
    key_ = mix64(master_seed + 0x9e3779b97f4a7c15ull * (stream_index + 1));
}

uint64_t RngStream::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ull);
}

double RngStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on two fresh uniforms; u1 shifted away from zero.
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

namespace {

struct GaussHermite {
    std::array<double, 64> node;
    std::array<double, 64> weight;
};

// Nodes and weights for the 64-point physicists' Gauss-Hermite rule,
// computed by Newton iteration on the orthonormal recurrence.
GaussHermite make_gauss_hermite() {
    constexpr int n = 64;
    GaussHermite out{};
    const double eps = 1e-14;
    double z = 0.0;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * out.node[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * out.node[1];
        } else {
            z = 2.0 * z - out.node[i - 2];
        }
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 0.7511255444649425; // pi^{-1/4}
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) break;
        }
        out.node[i] = z;
        out.node[n - 1 - i] = -z;
        out.weight[i] = 2.0 / (pp * pp);
        out.weight[n - 1 - i] = out.weight[i];
    }
    return out;
}

double softplus(double u) { return u > 35.0 ? u : std::log1p(std::exp(u)); }

double biawgn_capacity(double sigma) {
    static const GaussHermite gh = make_gauss_hermite();
    // C = 1 - E_z[ log2(1 + exp(-LLR(1 + sigma z))) ], z ~ N(0,1)
    const double inv_sqrt_pi = 0.5641895835477562869;
    const double sqrt2 = 1.4142135623730950488;
    double acc = 0.0;
    for (int i = 0; i < 64; ++i) {
        double zn = sqrt2 * gh.node[i];
        double llr = 2.0 * (1.0 + sigma * zn) / (sigma * sigma);
        acc += gh.weight[i] * softplus(-llr);
    }
    double c = 1.0 - inv_sqrt_pi * acc * 1.4426950408889634074;
    if (c < 0.0) c = 0.0;
    if (c > 1.0) c = 1.0;
    return c;
}

} // namespace

double capacity(const ChannelModel& ch) {
    if (const auto* b = std::get_if<Bec>(&ch)) return 1.0 - b->epsilon;
    if (const auto* b = std::get_if<Bsc>(&ch)) return 1.0 - binary_entropy(b->delta);
    return biawgn_capacity(std::get<Biawgn>(ch).sigma);
}

double shannon_capacity_real(double eta) {
    if (!(eta > 0.0)) throw domain_error("shannon_capacity_real: eta must be positive");
    return 0.5 * std::log2(1.0 + eta);
}

std::vector<Llr> transmit(const ChannelModel& ch, std::span<const uint8_t> codeword,
                          RngStream& rng) {
    std::vector<Llr> out(codeword.size());
    if (const auto* b = std::get_if<Bec>(&ch)) {
        for (size_t i = 0; i < codeword.size(); ++i) {
            if (rng.next_uniform() < b->epsilon) {
                out[i] = 0.0;
            } else {
                out[i] = codeword[i] ? -kInf : kInf;
            }
        }
    } else if (const auto* b = std::get_if<Bsc>(&ch)) {
        double mag = std::log((1.0 - b->delta) / b->delta);
        for (size_t i = 0; i < codeword.size(); ++i) {
            uint8_t rx = codeword[i] ^ (rng.next_uniform() < b->delta ? 1 : 0);
            out[i] = rx ? -mag : mag;
        }
    } else {
        double sigma = std::get<Biawgn>(ch).sigma;
        double scale = 2.0 / (sigma * sigma);
        for (size_t i = 0; i < codeword.size(); ++i) {
            double x = codeword[i] ? -1.0 : 1.0;
            out[i] = scale * (x + sigma * rng.next_gaussian());
        }
    }
    return out;
}

Llr llr_saturating_add(Llr a, Llr b) {
    if (std::isinf(a) && std::isinf(b)) {
        return (a > 0) == (b > 0) ? a : 0.0;
    }
    if (std::isinf(a)) return a;
    if (std::isinf(b)) return b;
    return a + b;
}

std::vector<Llr> fold_repetition_llrs(std::span<const Llr> llrs, uint32_t r) {
    if (r == 0 || llrs.size() % r != 0)
        throw domain_error("fold_repetition_llrs: r must divide the vector length");
    size_t outer = llrs.size() / r;
    std::vector<Llr> out(llrs.begin(), llrs.begin() + static_cast<long>(outer));
    for (uint32_t t = 1; t < r; ++t) {
        for (size_t j = 0; j < outer; ++j) {
            out[j] = llr_saturating_add(out[j], llrs[t * outer + j]);
        }
    }
    return out;
}

double ebn0_to_sigma(double ebn0_db, double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) throw domain_error("ebn0_to_sigma: rate must lie in (0,1]");
    return 1.0 / std::sqrt(2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

double sigma_to_ebn0(double sigma, double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) throw domain_error("sigma_to_ebn0: rate must lie in (0,1]");
    if (!(sigma > 0.0)) throw domain_error("sigma_to_ebn0: sigma must be positive");
    return 10.0 * std::log10(1.0 / (2.0 * rate * sigma * sigma));
}

} // namespace lowcap
