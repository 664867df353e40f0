#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lowcap {

// Default CRC generator x^6 + x + 1, stored with the leading term:
// bit i of the mask is the coefficient of x^i.
inline constexpr uint64_t kDefaultCrcPoly = 0b1000011;

inline uint32_t crc_degree(uint64_t poly) {
    uint32_t d = 0;
    while (poly >> (d + 1)) ++d;
    return d;
}

// Remainder of bits(x) * x^deg modulo the generator, MSB-first bit order.
inline std::vector<uint8_t> crc_bits(std::span<const uint8_t> bits, uint64_t poly) {
    uint32_t deg = crc_degree(poly);
    uint64_t reg = 0;
    uint64_t top = 1ull << deg;
    for (uint8_t b : bits) {
        reg = (reg << 1) | (b & 1);
        if (reg & top) reg ^= poly;
    }
    for (uint32_t i = 0; i < deg; ++i) {
        reg <<= 1;
        if (reg & top) reg ^= poly;
    }
    std::vector<uint8_t> out(deg);
    for (uint32_t i = 0; i < deg; ++i) {
        out[i] = static_cast<uint8_t>((reg >> (deg - 1 - i)) & 1);
    }
    return out;
}

inline bool crc_check(std::span<const uint8_t> payload, std::span<const uint8_t> crc,
                      uint64_t poly) {
    auto expect = crc_bits(payload, poly);
    if (expect.size() != crc.size()) return false;
    for (size_t i = 0; i < crc.size(); ++i) {
        if (expect[i] != (crc[i] & 1)) return false;
    }
    return true;
}

} // namespace lowcap
