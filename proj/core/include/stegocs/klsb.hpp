#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stegocs/image.hpp"
#include "stegocs/rng.hpp"

namespace stegocs {

// Payload bits, one element per bit (0/1). Bit order is MSB-first within
// each payload byte and within the k-bit group a pixel receives.
struct BitChunk {
    std::vector<uint8_t> bits;

    std::size_t length() const { return bits.size(); }
    bool operator==(const BitChunk&) const = default;
};

// Intra-nest bit-to-pixel assignment: chunk group p lands on pixel perm[p].
//
// Every order is regenerable from its 64-bit seed alone — stego-keys store
// nothing else. Seed layout:
//
//   [ base : 48 ][ m : 8 ][ nonce : 8 ]
//
//   seed == 0            -> identity ordering (sequential mode)
//   low 16 bits == 0     -> Fisher-Yates shuffle driven by SplitMix64(seed)
//   low 16 bits != 0     -> the base shuffle of (seed & ~0xFFFF), then m
//                           transpositions drawn from SplitMix64(seed)
//
// The patch field is how Levy-flight perturbation stays replayable: the
// optimizer varies (m, nonce) around a base order and the full result is
// still a pure function of one u64. Cross-implementation portability rests
// on SplitMix64 and bounded() exactly as written in rng.hpp.
class PixelOrder {
public:
    PixelOrder() = default;

    static PixelOrder identity(std::size_t n);
    static PixelOrder from_seed(uint64_t seed, std::size_t n);

    const std::vector<uint32_t>& perm() const { return perm_; }
    uint64_t seed() const { return seed_; }
    std::size_t size() const { return perm_.size(); }

    static constexpr uint64_t kBaseMask = ~0xFFFFull;
    static uint64_t patch_seed(uint64_t base_seed, unsigned m, unsigned nonce) {
        return (base_seed & kBaseMask) | ((m & 0xFFull) << 8) | (nonce & 0xFFull);
    }

private:
    std::vector<uint32_t> perm_;
    uint64_t seed_ = 0;
};

// replace the k lowest bits of a with bits (most significant of the k first)
uint8_t mutate_pixel(uint8_t a, std::span<const uint8_t> bits, int k);
std::vector<uint8_t> read_pixel_bits(uint8_t a, int k);

PixelGrid embed_chunk(const PixelGrid& block, const BitChunk& chunk, const PixelOrder& order,
                      int k);
// hot path for the optimizer: dst is overwritten, no allocation
void embed_chunk_into(PixelGrid& dst, const PixelGrid& block, const BitChunk& chunk,
                      const PixelOrder& order, int k);
BitChunk extract_chunk(const PixelGrid& block, const PixelOrder& order, int k);

// split payload bits into chunks of k*nest_size^2 bits, last chunk
// zero-padded; empty payload -> empty list
std::vector<BitChunk> chunk_payload(std::span<const uint8_t> payload, int k, int nest_size);
// inverse of chunk_payload modulo padding
std::vector<uint8_t> assemble_payload(const std::vector<BitChunk>& chunks,
                                      std::size_t payload_length);

// k * nest_size^2 * (number of whole nests)
uint64_t capacity_bits(const PixelGrid& grid, int k, int nest_size);

} // namespace stegocs
