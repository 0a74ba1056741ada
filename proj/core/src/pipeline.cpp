#include "stegocs/pipeline.hpp"

#include <cstring>
#include <fstream>
#include <string>

#include <zlib.h>

namespace stegocs {

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
}
void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

struct ByteReader {
    std::span<const uint8_t> data;
    std::size_t pos = 0;

    void need(std::size_t n) const {
        if (pos + n > data.size()) fail(ErrorKind::KeyFormat, "key truncated");
    }
    uint8_t u8() {
        need(1);
        return data[pos++];
    }
    uint16_t u16() {
        need(2);
        uint16_t v = static_cast<uint16_t>(data[pos] | (data[pos + 1] << 8));
        pos += 2;
        return v;
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(data[pos + i]) << (8 * i);
        pos += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(data[pos + i]) << (8 * i);
        pos += 8;
        return v;
    }
};

NestIndex nest_from_raster(const PixelGrid& grid, int nest_size, uint32_t raster) {
    const int per_row = grid.width() / nest_size;
    const int per_col = grid.height() / nest_size;
    if (per_row <= 0 ||
        raster >= static_cast<uint32_t>(per_row) * static_cast<uint32_t>(per_col))
        fail(ErrorKind::NestOutOfBounds,
             "plan nest " + std::to_string(raster) + " outside " +
                 std::to_string(per_row * per_col) + " nests");
    return NestIndex{static_cast<int>(raster) / per_row, static_cast<int>(raster) % per_row,
                     nest_size};
}

void check_capacity(const PixelGrid& cover, std::size_t payload_bytes, int k, int nest_size) {
    const uint64_t available = capacity_bits(cover, k, nest_size);
    const uint64_t required = static_cast<uint64_t>(payload_bytes) * 8;
    if (required > available)
        fail(ErrorKind::CapacityExceeded, "required=" + std::to_string(required) +
                                              " available=" + std::to_string(available) +
                                              " bits");
}

} // namespace

uint32_t payload_crc32(std::span<const uint8_t> payload) {
    return static_cast<uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(payload.data()),
              static_cast<uInt>(payload.size())));
}

std::vector<uint8_t> StegoKey::to_bytes() const {
    std::vector<uint8_t> out;
    out.reserve(28 + 12 * plans.size());
    out.push_back('S');
    out.push_back('K');
    out.push_back('C');
    out.push_back('S');
    out.push_back(format_version);
    out.push_back(k);
    put_u16(out, nest_size);
    put_u32(out, payload_length);
    put_u32(out, payload_crc32);
    put_u64(out, master_seed);
    put_u32(out, static_cast<uint32_t>(plans.size()));
    for (const auto& plan : plans) {
        put_u32(out, plan.nest_index);
        put_u64(out, plan.order_seed);
    }
    return out;
}

StegoKey StegoKey::from_bytes(std::span<const uint8_t> bytes) {
    ByteReader r{bytes};
    r.need(4);
    if (std::memcmp(bytes.data(), "SKCS", 4) != 0)
        fail(ErrorKind::KeyFormat, "bad magic");
    r.pos = 4;

    StegoKey key;
    key.format_version = r.u8();
    if (key.format_version != kFormatVersion)
        fail(ErrorKind::KeyVersionMismatch,
             "key version " + std::to_string(key.format_version) + ", expected " +
                 std::to_string(kFormatVersion));
    key.k = r.u8();
    key.nest_size = r.u16();
    key.payload_length = r.u32();
    key.payload_crc32 = r.u32();
    key.master_seed = r.u64();
    const uint32_t count = r.u32();
    r.need(static_cast<std::size_t>(count) * 12); // before trusting it with reserve
    key.plans.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        ChunkPlan plan;
        plan.nest_index = r.u32();
        plan.order_seed = r.u64();
        key.plans.push_back(plan);
    }
    if (r.pos != bytes.size()) fail(ErrorKind::KeyFormat, "trailing bytes");
    return key;
}

void save_key(const StegoKey& key, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::IoFailure, "cannot open " + path.string() + " for writing");
    const auto bytes = key.to_bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(ErrorKind::IoFailure, "write failed: " + path.string());
}

StegoKey load_key(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::IoFailure, "cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return StegoKey::from_bytes(bytes);
}

EmbedResult embed(const PixelGrid& cover, std::span<const uint8_t> payload, int k,
                  const CsParams& params, EmbedMode mode, int nest_size) {
    if (payload.empty()) fail(ErrorKind::EmptyPayload, "nothing to embed");
    check_capacity(cover, payload.size(), k, nest_size);

    const auto chunks = chunk_payload(payload, k, nest_size);
    const auto nest_list = nests(cover, nest_size);

    EmbedResult result;
    result.key.k = static_cast<uint8_t>(k);
    result.key.nest_size = static_cast<uint16_t>(nest_size);
    result.key.payload_length = static_cast<uint32_t>(payload.size());
    result.key.payload_crc32 = payload_crc32(payload);
    result.key.master_seed = params.master_seed;

    if (mode == EmbedMode::Sequential) {
        for (std::size_t c = 0; c < chunks.size(); ++c)
            result.key.plans.push_back(ChunkPlan{static_cast<uint32_t>(c), 0});
    } else {
        std::vector<std::pair<NestIndex, PixelGrid>> blocks;
        blocks.reserve(nest_list.size());
        for (const auto& nest : nest_list)
            blocks.emplace_back(nest, extract_nest(cover, nest));
        ImagePlan plan = optimize_image(blocks, chunks, k, params);
        result.key.plans = std::move(plan.plans);
        result.trace = std::move(plan.nests);
    }

    result.stego = cover;
    const std::size_t n = static_cast<std::size_t>(nest_size) * nest_size;
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        const auto& plan = result.key.plans[c];
        const NestIndex nest = nest_list[plan.nest_index];
        const PixelGrid block = extract_nest(cover, nest);
        const PixelOrder order = PixelOrder::from_seed(plan.order_seed, n);
        write_nest(result.stego, nest, embed_chunk(block, chunks[c], order, k));
    }

    result.report = quality_report(cover, result.stego, params.alpha_weight);
    return result;
}

std::vector<uint8_t> extract(const PixelGrid& stego, const StegoKey& key) {
    if (key.k < 1 || key.k > 8) fail(ErrorKind::KeyFormat, "key k out of range");
    if (key.nest_size < 2) fail(ErrorKind::KeyFormat, "key nest_size out of range");
    const std::size_t n = static_cast<std::size_t>(key.nest_size) * key.nest_size;

    std::vector<BitChunk> chunks;
    chunks.reserve(key.plans.size());
    for (const auto& plan : key.plans) {
        const NestIndex nest = nest_from_raster(stego, key.nest_size, plan.nest_index);
        const PixelGrid block = extract_nest(stego, nest);
        const PixelOrder order = PixelOrder::from_seed(plan.order_seed, n);
        chunks.push_back(extract_chunk(block, order, key.k));
    }

    const std::size_t have_bits = chunks.size() * n * key.k;
    if (have_bits < static_cast<std::size_t>(key.payload_length) * 8)
        fail(ErrorKind::KeyFormat, "plans cover fewer bits than payload_length");

    std::vector<uint8_t> payload = assemble_payload(chunks, key.payload_length);
    if (payload_crc32(payload) != key.payload_crc32)
        fail(ErrorKind::CrcMismatch, "payload checksum failed");
    return payload;
}

EmbedResult embed_mp3(const PixelGrid& cover, const std::vector<uint8_t>& mp3_bytes, int k,
                      const CsParams& params, EmbedMode mode, int nest_size) {
    const mp3::Stream stream = mp3::parse_mp3(mp3_bytes);
    EmbedResult result = embed(cover, mp3::to_payload(stream), k, params, mode, nest_size);
    result.mp3_frames = stream.frames.size();
    return result;
}

QualityReport analyze(const PixelGrid& cover, const PixelGrid& stego, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) fail(ErrorKind::BadArgument, "alpha must be in [0,1]");
    return quality_report(cover, stego, alpha);
}

} // namespace stegocs
