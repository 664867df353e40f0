#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lowcap/channel.hpp"
#include "lowcap/crc.hpp"

namespace lowcap {

struct SyntheticChannelReliability {
    uint32_t index;
    double bhattacharyya;
};

// A constructed polar code: n = 2^m, frozen positions carry zeros, info
// positions carry payload followed by CRC. reliability_order lists the
// selected indices best-first (Bhattacharyya ascending, ties by index); the
// CRC bits sit on its least-reliable tail.
struct PolarSpec {
    uint32_t m = 0;
    std::vector<uint32_t> info_set;          // ascending
    std::vector<uint32_t> reliability_order; // best first, |.| == k_total
    uint32_t crc_len = 0;
    uint64_t crc_poly = kDefaultCrcPoly;
    double design_epsilon = 0.0; // erasure parameter the ranking used
    std::string construction;    // "bec" or "bec_surrogate"

    uint32_t n() const { return 1u << m; }
    uint32_t k_total() const { return static_cast<uint32_t>(reliability_order.size()); }
    uint32_t k_payload() const { return k_total() - crc_len; }
};

struct DecodeResult {
    std::vector<uint8_t> payload;
    bool crc_ok = false;
    double path_metric = 0.0;
};

struct Theorem7Audit {
    double kappa = 0.0;
    double m0 = 0.0;                 // log2(4 kappa^2)
    uint32_t required_leading_plus = 0;
    bool vacuous = false;            // m0 >= m: no repetition is guaranteed
    uint64_t checked = 0;            // indices with Z < 1/2
    std::vector<uint32_t> counterexamples;
};

// Exact erasure-channel Bhattacharyya parameter of synthetic channel
// `index` after m polarization steps, MSB-first: bit 1 squares Z, bit 0
// maps Z to 2Z - Z^2.
double bhattacharyya_bec(double epsilon, uint32_t index, uint32_t m);

// All 2^m reliabilities sorted ascending (ties by index ascending).
std::vector<SyntheticChannelReliability> rank_bec_channels(double epsilon, uint32_t m);

// Select the k_total most reliable indices. Non-erasure channels go through
// the erasure surrogate at matched capacity. crc_len counts toward k_total.
PolarSpec construct(const ChannelModel& ch, uint32_t m, uint32_t k_total,
                    uint32_t crc_len = 0, uint64_t crc_poly = kDefaultCrcPoly);

// In-place butterfly transform u <- u G_n (an involution over GF(2)).
void polar_transform(std::span<uint8_t> bits);

std::vector<uint8_t> encode(const PolarSpec& spec, std::span<const uint8_t> payload);

uint32_t min_distance(const PolarSpec& spec);

DecodeResult sc_decode(const PolarSpec& spec, std::span<const Llr> llrs);
DecodeResult scl_decode(const PolarSpec& spec, std::span<const Llr> llrs, uint32_t list_size);

// Swap the exact check-node update for the min-sum approximation (process
// wide; intended to be set once before decoding starts).
void set_min_sum_f_update(bool enabled);

// log2(4 kappa^2): polarization depth past which the construction stops
// guaranteeing leading plus transforms.
double theorem7_m0(double kappa);

// 2^s where s is the longest all-ones index prefix shared by the whole info
// set; the codeword is exactly that many tiles of an inner codeword.
uint32_t implicit_repetition_factor(const PolarSpec& spec);

// The length-n/factor code whose tiling reproduces spec's codewords.
PolarSpec inner_spec(const PolarSpec& spec);

// Structurally identical to encode/scl_decode but routed through the inner
// code: encode once and tile; fold the LLR tiles and list-decode the inner
// code. Bit-exact against the direct paths.
std::vector<uint8_t> fast_encode(const PolarSpec& spec, std::span<const uint8_t> payload);
DecodeResult fast_decode(const PolarSpec& spec, std::span<const Llr> llrs, uint32_t list_size);

// Enumerates every index with Z < 1/2 on BEC(epsilon) and verifies it has the
// guaranteed number of leading plus transforms (ceil(m - m0)); empty
// counterexample list means the structural claim holds at this (epsilon, m).
Theorem7Audit theorem7_bhattacharyya_audit(double epsilon, uint32_t m);

// Versioned JSON round trip for caching constructed codes.
std::string polar_spec_to_json(const PolarSpec& spec);
PolarSpec polar_spec_from_json(const std::string& text);

uint64_t polar_spec_digest(const PolarSpec& spec);

} // namespace lowcap
