#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "stegocs/cuckoo.hpp"
#include "stegocs/mp3.hpp"

namespace stegocs {

enum class EmbedMode { Cuckoo, Sequential };

// Sidecar descriptor needed for extraction. Wire format (little-endian):
//   magic "SKCS" | version u8 (=1) | k u8 | nest_size u16 |
//   payload_length u32 | payload_crc32 u32 | master_seed u64 |
//   plan_count u32 | plan_count x { nest_index u32, order_seed u64 }
// Total 28 + 12 * plan_count bytes.
struct StegoKey {
    static constexpr uint8_t kFormatVersion = 1;

    uint8_t format_version = kFormatVersion;
    uint8_t k = 1;
    uint16_t nest_size = 16;
    uint32_t payload_length = 0;
    uint32_t payload_crc32 = 0;
    uint64_t master_seed = 0;
    std::vector<ChunkPlan> plans;

    std::vector<uint8_t> to_bytes() const;
    static StegoKey from_bytes(std::span<const uint8_t> bytes);

    bool operator==(const StegoKey&) const = default;
};

void save_key(const StegoKey& key, const std::filesystem::path& path);
StegoKey load_key(const std::filesystem::path& path);

uint32_t payload_crc32(std::span<const uint8_t> payload);

struct EmbedResult {
    PixelGrid stego;
    StegoKey key;
    QualityReport report;                // cover vs stego
    std::vector<NestOptimization> trace; // raster order; empty in sequential mode
    std::optional<std::size_t> mp3_frames; // set by embed_mp3
};

// Cuckoo mode places chunks per optimize_image; sequential mode (the simple
// LSB baseline) fills nests in raster order with identity orderings. Either
// way the stego image differs from the cover only in the k low bits of
// pixels inside planned nests.
EmbedResult embed(const PixelGrid& cover, std::span<const uint8_t> payload, int k,
                  const CsParams& params, EmbedMode mode, int nest_size = 16);

// Reads chunks per the key's plans, truncates to payload_length and checks
// the CRC32; a mismatch means a wrong key, a wrong image, or tampering.
std::vector<uint8_t> extract(const PixelGrid& stego, const StegoKey& key);

EmbedResult embed_mp3(const PixelGrid& cover, const std::vector<uint8_t>& mp3_bytes, int k,
                      const CsParams& params, EmbedMode mode, int nest_size = 16);

QualityReport analyze(const PixelGrid& cover, const PixelGrid& stego, double alpha = 0.5);

} // namespace stegocs
