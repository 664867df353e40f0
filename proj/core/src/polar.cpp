#include "lowcap/polar.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <nlohmann/json.hpp>

#include "lowcap/errors.hpp"

namespace lowcap {

double bhattacharyya_bec(double epsilon, uint32_t index, uint32_t m) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw domain_error("bhattacharyya_bec: epsilon must lie in [0,1]");
    if (m >= 31 || index >= (1u << m)) throw domain_error("bhattacharyya_bec: index out of range");
    double z = epsilon;
    for (uint32_t j = m; j-- > 0;) {
        if ((index >> j) & 1) {
            z = z * z; // plus / variable
        } else {
            z = 2.0 * z - z * z; // minus / check
        }
    }
    return z;
}

std::vector<SyntheticChannelReliability> rank_bec_channels(double epsilon, uint32_t m) {
    uint32_t n = 1u << m;
    std::vector<SyntheticChannelReliability> out(n);
    for (uint32_t i = 0; i < n; ++i) {
        out[i] = {i, bhattacharyya_bec(epsilon, i, m)};
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.bhattacharyya != b.bhattacharyya) return a.bhattacharyya < b.bhattacharyya;
        return a.index < b.index;
    });
    return out;
}

PolarSpec construct(const ChannelModel& ch, uint32_t m, uint32_t k_total, uint32_t crc_len,
                    uint64_t crc_poly) {
    if (m == 0 || m >= 31) throw domain_error("construct: m out of range");
    uint32_t n = 1u << m;
    if (k_total > n) throw domain_error("construct: k_total exceeds blocklength");
    if (crc_len >= k_total && k_total > 0 && crc_len > 0)
        throw domain_error("construct: crc_len must leave payload room");
    if (crc_len > 0 && crc_degree(crc_poly) != crc_len)
        throw domain_error("construct: crc_poly degree does not match crc_len");

    PolarSpec spec;
    spec.m = m;
    spec.crc_len = crc_len;
    spec.crc_poly = crc_poly;
    if (std::holds_alternative<Bec>(ch)) {
        spec.design_epsilon = std::get<Bec>(ch).epsilon;
        spec.construction = "bec";
    } else {
        spec.design_epsilon = 1.0 - capacity(ch);
        spec.construction = "bec_surrogate";
    }

    auto ranked = rank_bec_channels(spec.design_epsilon, m);
    spec.reliability_order.reserve(k_total);
    for (uint32_t i = 0; i < k_total; ++i) {
        spec.reliability_order.push_back(ranked[i].index);
    }
    spec.info_set = spec.reliability_order;
    std::sort(spec.info_set.begin(), spec.info_set.end());
    return spec;
}

void polar_transform(std::span<uint8_t> bits) {
    size_t n = bits.size();
    if (n == 0 || (n & (n - 1)) != 0) throw domain_error("polar_transform: length not a power of two");
    for (size_t h = 1; h < n; h <<= 1) {
        for (size_t i = 0; i < n; i += 2 * h) {
            for (size_t j = 0; j < h; ++j) {
                bits[i + j] ^= bits[i + j + h];
            }
        }
    }
}

namespace {

// Scatter payload||crc into the u-vector by reliability: payload on the most
// reliable selected indices, CRC on the tail.
std::vector<uint8_t> build_u(const PolarSpec& spec, std::span<const uint8_t> payload) {
    if (payload.size() != spec.k_payload())
        throw domain_error("encode: payload length mismatch");
    std::vector<uint8_t> u(spec.n(), 0);
    for (uint32_t j = 0; j < spec.k_payload(); ++j) {
        u[spec.reliability_order[j]] = payload[j] & 1;
    }
    if (spec.crc_len > 0) {
        auto crc = crc_bits(payload, spec.crc_poly);
        for (uint32_t j = 0; j < spec.crc_len; ++j) {
            u[spec.reliability_order[spec.k_payload() + j]] = crc[j];
        }
    }
    return u;
}

} // namespace

std::vector<uint8_t> encode(const PolarSpec& spec, std::span<const uint8_t> payload) {
    auto u = build_u(spec, payload);
    polar_transform(u);
    return u;
}

uint32_t min_distance(const PolarSpec& spec) {
    if (spec.info_set.empty()) throw domain_error("min_distance: empty info set");
    uint32_t best = spec.n();
    for (uint32_t idx : spec.info_set) {
        best = std::min(best, 1u << std::popcount(idx));
    }
    return best;
}

double theorem7_m0(double kappa) {
    if (!(kappa > 0.0)) throw domain_error("theorem7_m0: kappa must be positive");
    return std::log2(4.0 * kappa * kappa);
}

namespace {

uint32_t leading_ones(uint32_t index, uint32_t m) {
    uint32_t s = 0;
    for (uint32_t j = m; j-- > 0;) {
        if ((index >> j) & 1) {
            ++s;
        } else {
            break;
        }
    }
    return s;
}

} // namespace

uint32_t implicit_repetition_factor(const PolarSpec& spec) {
    if (spec.info_set.empty()) throw domain_error("implicit_repetition_factor: empty info set");
    uint32_t s = spec.m;
    for (uint32_t idx : spec.info_set) {
        s = std::min(s, leading_ones(idx, spec.m));
        if (s == 0) break;
    }
    return 1u << s;
}

PolarSpec inner_spec(const PolarSpec& spec) {
    uint32_t factor = implicit_repetition_factor(spec);
    uint32_t s = static_cast<uint32_t>(std::countr_zero(factor));
    if (s == 0) return spec;
    uint32_t offset = spec.n() - (spec.n() >> s);
    PolarSpec inner;
    inner.m = spec.m - s;
    inner.crc_len = spec.crc_len;
    inner.crc_poly = spec.crc_poly;
    inner.design_epsilon = spec.design_epsilon;
    inner.construction = spec.construction;
    inner.reliability_order.reserve(spec.reliability_order.size());
    for (uint32_t idx : spec.reliability_order) {
        inner.reliability_order.push_back(idx - offset);
    }
    inner.info_set = inner.reliability_order;
    std::sort(inner.info_set.begin(), inner.info_set.end());
    return inner;
}

std::vector<uint8_t> fast_encode(const PolarSpec& spec, std::span<const uint8_t> payload) {
    uint32_t factor = implicit_repetition_factor(spec);
    if (factor == 1) return encode(spec, payload);
    PolarSpec inner = inner_spec(spec);
    auto tile = encode(inner, payload);
    std::vector<uint8_t> out;
    out.reserve(spec.n());
    for (uint32_t t = 0; t < factor; ++t) {
        out.insert(out.end(), tile.begin(), tile.end());
    }
    return out;
}

DecodeResult fast_decode(const PolarSpec& spec, std::span<const Llr> llrs, uint32_t list_size) {
    uint32_t factor = implicit_repetition_factor(spec);
    if (factor == 1) return scl_decode(spec, llrs, list_size);
    if (llrs.size() != spec.n()) throw domain_error("fast_decode: llr length mismatch");
    auto folded = fold_repetition_llrs(llrs, factor);
    return scl_decode(inner_spec(spec), folded, list_size);
}

Theorem7Audit theorem7_bhattacharyya_audit(double epsilon, uint32_t m) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("theorem7_bhattacharyya_audit: epsilon must lie in (0,1)");
    if (m == 0 || m >= 31) throw domain_error("theorem7_bhattacharyya_audit: m out of range");
    Theorem7Audit audit;
    uint32_t n = 1u << m;
    audit.kappa = static_cast<double>(n) * (1.0 - epsilon);
    audit.m0 = theorem7_m0(audit.kappa);
    if (audit.m0 >= static_cast<double>(m)) {
        audit.vacuous = true;
        audit.required_leading_plus = 0;
        return audit;
    }
    audit.required_leading_plus =
        static_cast<uint32_t>(std::ceil(static_cast<double>(m) - audit.m0));
    for (uint32_t i = 0; i < n; ++i) {
        if (bhattacharyya_bec(epsilon, i, m) < 0.5) {
            ++audit.checked;
            if (leading_ones(i, m) < audit.required_leading_plus) {
                audit.counterexamples.push_back(i);
            }
        }
    }
    return audit;
}

std::string polar_spec_to_json(const PolarSpec& spec) {
    nlohmann::json j;
    j["schema"] = "lowcap.polar_spec";
    j["version"] = 1;
    j["m"] = spec.m;
    j["reliability_order"] = spec.reliability_order;
    j["crc_len"] = spec.crc_len;
    j["crc_poly"] = spec.crc_poly;
    j["design_epsilon"] = spec.design_epsilon;
    j["construction"] = spec.construction;
    return j.dump(2);
}

PolarSpec polar_spec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("schema", "") != "lowcap.polar_spec" || j.value("version", 0) != 1)
        throw domain_error("polar_spec_from_json: unknown schema/version");
    PolarSpec spec;
    spec.m = j.at("m").get<uint32_t>();
    spec.reliability_order = j.at("reliability_order").get<std::vector<uint32_t>>();
    spec.crc_len = j.at("crc_len").get<uint32_t>();
    spec.crc_poly = j.at("crc_poly").get<uint64_t>();
    spec.design_epsilon = j.value("design_epsilon", 0.0);
    spec.construction = j.value("construction", "");
    spec.info_set = spec.reliability_order;
    std::sort(spec.info_set.begin(), spec.info_set.end());
    uint32_t n = 1u << spec.m;
    for (uint32_t idx : spec.info_set) {
        if (idx >= n) throw domain_error("polar_spec_from_json: index out of range");
    }
    return spec;
}

uint64_t polar_spec_digest(const PolarSpec& spec) {
    uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    feed(spec.m);
    feed(spec.crc_len);
    feed(spec.crc_poly);
    for (uint32_t idx : spec.reliability_order) feed(idx);
    return h;
}

} // namespace lowcap
