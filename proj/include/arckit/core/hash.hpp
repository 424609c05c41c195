#pragma once

#include "arckit/core/grid.hpp"

#include <compare>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arckit {

/// 128-bit content digest. Ordering is (hi, lo) lexicographic.
struct Digest {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    std::string hex() const {
        static constexpr char kHex[] = "0123456789abcdef";
        std::string s(32, '0');
        for (int i = 0; i < 16; ++i) {
            s[15 - i] = kHex[(hi >> (4 * i)) & 0xf];
            s[31 - i] = kHex[(lo >> (4 * i)) & 0xf];
        }
        return s;
    }

    friend auto operator<=>(const Digest&, const Digest&) = default;
};

namespace detail {

inline std::uint64_t rotl64(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }

inline std::uint64_t fmix64(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return k;
}

inline std::uint64_t load_le64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

// MurmurHash3_x64_128. Reads bytes explicitly little-endian so the digest
// does not depend on host byte order.
inline Digest murmur3_128(std::span<const unsigned char> data, std::uint64_t seed = 0) {
    const std::size_t len = data.size();
    const std::size_t nblocks = len / 16;
    std::uint64_t h1 = seed, h2 = seed;
    constexpr std::uint64_t c1 = 0x87c37b91114253d5ULL;
    constexpr std::uint64_t c2 = 0x4cf5ad432745937fULL;
    const unsigned char* p = data.data();

    for (std::size_t i = 0; i < nblocks; ++i) {
        std::uint64_t k1 = load_le64(p + i * 16);
        std::uint64_t k2 = load_le64(p + i * 16 + 8);
        k1 *= c1; k1 = rotl64(k1, 31); k1 *= c2; h1 ^= k1;
        h1 = rotl64(h1, 27); h1 += h2; h1 = h1 * 5 + 0x52dce729;
        k2 *= c2; k2 = rotl64(k2, 33); k2 *= c1; h2 ^= k2;
        h2 = rotl64(h2, 31); h2 += h1; h2 = h2 * 5 + 0x38495ab5;
    }

    const unsigned char* tail = p + nblocks * 16;
    std::uint64_t k1 = 0, k2 = 0;
    switch (len & 15) {
    case 15: k2 ^= std::uint64_t(tail[14]) << 48; [[fallthrough]];
    case 14: k2 ^= std::uint64_t(tail[13]) << 40; [[fallthrough]];
    case 13: k2 ^= std::uint64_t(tail[12]) << 32; [[fallthrough]];
    case 12: k2 ^= std::uint64_t(tail[11]) << 24; [[fallthrough]];
    case 11: k2 ^= std::uint64_t(tail[10]) << 16; [[fallthrough]];
    case 10: k2 ^= std::uint64_t(tail[9]) << 8; [[fallthrough]];
    case 9:
        k2 ^= std::uint64_t(tail[8]);
        k2 *= c2; k2 = rotl64(k2, 33); k2 *= c1; h2 ^= k2;
        [[fallthrough]];
    case 8: k1 ^= std::uint64_t(tail[7]) << 56; [[fallthrough]];
    case 7: k1 ^= std::uint64_t(tail[6]) << 48; [[fallthrough]];
    case 6: k1 ^= std::uint64_t(tail[5]) << 40; [[fallthrough]];
    case 5: k1 ^= std::uint64_t(tail[4]) << 32; [[fallthrough]];
    case 4: k1 ^= std::uint64_t(tail[3]) << 24; [[fallthrough]];
    case 3: k1 ^= std::uint64_t(tail[2]) << 16; [[fallthrough]];
    case 2: k1 ^= std::uint64_t(tail[1]) << 8; [[fallthrough]];
    case 1:
        k1 ^= std::uint64_t(tail[0]);
        k1 *= c1; k1 = rotl64(k1, 31); k1 *= c2; h1 ^= k1;
        break;
    default: break;
    }

    h1 ^= len; h2 ^= len;
    h1 += h2; h2 += h1;
    h1 = fmix64(h1); h2 = fmix64(h2);
    h1 += h2; h2 += h1;
    return {h1, h2};
}

inline void append_le32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

inline void append_grid_bytes(std::vector<unsigned char>& out, const Grid& g) {
    append_le32(out, static_cast<std::uint32_t>(g.width()));
    append_le32(out, static_cast<std::uint32_t>(g.height()));
    for (Color c : g.cells()) out.push_back(static_cast<unsigned char>(c));
}

} // namespace detail

/// Layout: u32le width, u32le height, then one byte per cell in row-major order.
inline Digest canonical_hash(const Grid& g) {
    std::vector<unsigned char> bytes;
    bytes.reserve(8 + g.cells().size());
    detail::append_grid_bytes(bytes, g);
    return detail::murmur3_128(bytes);
}

/// Digest of an ordered tuple of grids (e.g. one attempt across several test inputs).
inline Digest canonical_hash(std::span<const Grid> grids) {
    std::vector<unsigned char> bytes;
    detail::append_le32(bytes, static_cast<std::uint32_t>(grids.size()));
    for (const auto& g : grids) detail::append_grid_bytes(bytes, g);
    return detail::murmur3_128(bytes, 0x9e3779b97f4a7c15ULL);
}

inline Digest hash_text(std::string_view text) {
    return detail::murmur3_128({reinterpret_cast<const unsigned char*>(text.data()), text.size()});
}

} // namespace arckit
