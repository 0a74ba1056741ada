#include "stegocs/klsb.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stegocs {

namespace {

void check_k(int k) {
    if (k < 1 || k > 8)
        fail(ErrorKind::BadArgument, "k = " + std::to_string(k) + ", need 1..8");
}

void check_block_chunk(const PixelGrid& block, const BitChunk& chunk, const PixelOrder& order,
                       int k) {
    check_k(k);
    const std::size_t n = block.size();
    if (order.size() != n)
        fail(ErrorKind::BadArgument, "order size " + std::to_string(order.size()) +
                                         " != block pixels " + std::to_string(n));
    if (chunk.length() != n * static_cast<std::size_t>(k))
        fail(ErrorKind::BadArgument, "chunk length " + std::to_string(chunk.length()) +
                                         " != k*pixels " + std::to_string(n * k));
}

} // namespace

PixelOrder PixelOrder::identity(std::size_t n) {
    PixelOrder o;
    o.seed_ = 0;
    o.perm_.resize(n);
    std::iota(o.perm_.begin(), o.perm_.end(), 0u);
    return o;
}

PixelOrder PixelOrder::from_seed(uint64_t seed, std::size_t n) {
    PixelOrder o = identity(n);
    o.seed_ = seed;
    if (n < 2) return o;

    const uint64_t base = seed & kBaseMask;
    if (base != 0) {
        SplitMix64 rng(base);
        for (std::size_t i = n - 1; i > 0; --i) {
            const std::size_t j = rng.bounded(i + 1);
            std::swap(o.perm_[i], o.perm_[j]);
        }
    }
    const uint64_t patch = seed & 0xFFFFull;
    if (patch != 0) {
        // replay exactly the m recorded by perturb_order, clamped like it was
        std::size_t m = (patch >> 8) & 0xFF;
        m = std::clamp<std::size_t>(m, 1, std::max<std::size_t>(n / 2, 1));
        SplitMix64 prng(seed);
        for (std::size_t t = 0; t < m; ++t) {
            const std::size_t i = prng.bounded(n);
            std::size_t j = prng.bounded(n - 1);
            if (j >= i) ++j; // distinct pair, so each transposition moves something
            std::swap(o.perm_[i], o.perm_[j]);
        }
    }
    return o;
}

uint8_t mutate_pixel(uint8_t a, std::span<const uint8_t> bits, int k) {
    check_k(k);
    if (bits.size() != static_cast<std::size_t>(k))
        fail(ErrorKind::BadArgument, "need exactly k bits");
    unsigned value = 0;
    for (int i = 0; i < k; ++i) value = (value << 1) | (bits[i] & 1u);
    const unsigned mask = (1u << k) - 1u;
    return static_cast<uint8_t>((a & ~mask) | value);
}

std::vector<uint8_t> read_pixel_bits(uint8_t a, int k) {
    check_k(k);
    std::vector<uint8_t> bits(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) bits[i] = (a >> (k - 1 - i)) & 1u;
    return bits;
}

void embed_chunk_into(PixelGrid& dst, const PixelGrid& block, const BitChunk& chunk,
                      const PixelOrder& order, int k) {
    check_block_chunk(block, chunk, order, k);
    if (&dst != &block) dst = block;
    const unsigned mask = (1u << k) - 1u;
    uint8_t* out = dst.samples().data();
    const uint8_t* bits = chunk.bits.data();
    const std::size_t n = block.size();
    for (std::size_t p = 0; p < n; ++p) {
        unsigned value = 0;
        for (int i = 0; i < k; ++i) value = (value << 1) | (bits[p * k + i] & 1u);
        const uint32_t pixel = order.perm()[p];
        out[pixel] = static_cast<uint8_t>((out[pixel] & ~mask) | value);
    }
}

PixelGrid embed_chunk(const PixelGrid& block, const BitChunk& chunk, const PixelOrder& order,
                      int k) {
    PixelGrid out = block;
    embed_chunk_into(out, block, chunk, order, k);
    return out;
}

BitChunk extract_chunk(const PixelGrid& block, const PixelOrder& order, int k) {
    check_k(k);
    const std::size_t n = block.size();
    if (order.size() != n)
        fail(ErrorKind::BadArgument, "order size != block pixels");
    BitChunk chunk;
    chunk.bits.resize(n * static_cast<std::size_t>(k));
    const uint8_t* in = block.samples().data();
    for (std::size_t p = 0; p < n; ++p) {
        const uint8_t a = in[order.perm()[p]];
        for (int i = 0; i < k; ++i) chunk.bits[p * k + i] = (a >> (k - 1 - i)) & 1u;
    }
    return chunk;
}

std::vector<BitChunk> chunk_payload(std::span<const uint8_t> payload, int k, int nest_size) {
    check_k(k);
    if (nest_size < 2) fail(ErrorKind::BadArgument, "nest_size must be >= 2");
    if (payload.empty()) return {};

    const std::size_t chunk_bits =
        static_cast<std::size_t>(k) * nest_size * nest_size;
    const std::size_t total_bits = payload.size() * 8;
    const std::size_t count = (total_bits + chunk_bits - 1) / chunk_bits;

    std::vector<BitChunk> chunks(count);
    for (auto& c : chunks) c.bits.assign(chunk_bits, 0);
    for (std::size_t bit = 0; bit < total_bits; ++bit) {
        const uint8_t byte = payload[bit / 8];
        chunks[bit / chunk_bits].bits[bit % chunk_bits] = (byte >> (7 - bit % 8)) & 1u;
    }
    return chunks;
}

std::vector<uint8_t> assemble_payload(const std::vector<BitChunk>& chunks,
                                      std::size_t payload_length) {
    std::vector<uint8_t> out(payload_length, 0);
    std::size_t bit = 0;
    for (const auto& c : chunks) {
        for (uint8_t b : c.bits) {
            if (bit >= payload_length * 8) return out;
            out[bit / 8] = static_cast<uint8_t>(out[bit / 8] | ((b & 1u) << (7 - bit % 8)));
            ++bit;
        }
    }
    if (bit < payload_length * 8)
        fail(ErrorKind::BadArgument, "chunks hold fewer bits than payload_length");
    return out;
}

uint64_t capacity_bits(const PixelGrid& grid, int k, int nest_size) {
    check_k(k);
    if (nest_size < 2) fail(ErrorKind::BadArgument, "nest_size must be >= 2");
    const uint64_t whole = static_cast<uint64_t>(grid.height() / nest_size) *
                           static_cast<uint64_t>(grid.width() / nest_size);
    return static_cast<uint64_t>(k) * nest_size * nest_size * whole;
}

} // namespace stegocs
