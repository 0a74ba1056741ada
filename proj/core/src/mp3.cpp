#include "stegocs/mp3.hpp"

#include <array>
#include <cstring>

namespace stegocs::mp3 {

namespace {

// bitrate tables in kbps, index 1..14 (0 = free, 15 = bad)
constexpr std::array<int, 16> kBitrateV1L1 = {0, 32, 64, 96, 128, 160, 192, 224,
                                              256, 288, 320, 352, 384, 416, 448, -1};
constexpr std::array<int, 16> kBitrateV1L2 = {0, 32, 48, 56, 64,  80,  96,  112,
                                              128, 160, 192, 224, 256, 320, 384, -1};
constexpr std::array<int, 16> kBitrateV1L3 = {0, 32, 40, 48, 56,  64,  80,  96,
                                              112, 128, 160, 192, 224, 256, 320, -1};
constexpr std::array<int, 16> kBitrateV2L1 = {0, 32, 48, 56, 64,  80,  96,  112,
                                              128, 144, 160, 176, 192, 224, 256, -1};
// MPEG2/2.5 Layers II and III share one table
constexpr std::array<int, 16> kBitrateV2L23 = {0, 8,  16, 24, 32,  40,  48, 56,
                                               64, 80, 96, 112, 128, 144, 160, -1};

constexpr std::array<int, 3> kSampleRateV1 = {44100, 48000, 32000};
constexpr std::array<int, 3> kSampleRateV2 = {22050, 24000, 16000};
constexpr std::array<int, 3> kSampleRateV2_5 = {11025, 12000, 8000};

const std::array<int, 16>& bitrate_table(MpegVersion v, Layer l) {
    if (v == MpegVersion::Mpeg1) {
        switch (l) {
        case Layer::I: return kBitrateV1L1;
        case Layer::II: return kBitrateV1L2;
        case Layer::III: return kBitrateV1L3;
        }
    }
    return l == Layer::I ? kBitrateV2L1 : kBitrateV2L23;
}

bool header_starts_at(std::span<const uint8_t> bytes, std::size_t pos) {
    if (pos + 4 > bytes.size()) return false;
    if (bytes[pos] != 0xFF || (bytes[pos + 1] & 0xE0) != 0xE0) return false;
    try {
        (void)parse_frame_header(bytes.subspan(pos, 4));
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::size_t syncsafe_size(const uint8_t* p) {
    // four 7-bit groups, high bit of each byte must stay clear
    return (static_cast<std::size_t>(p[0] & 0x7F) << 21) |
           (static_cast<std::size_t>(p[1] & 0x7F) << 14) |
           (static_cast<std::size_t>(p[2] & 0x7F) << 7) |
           static_cast<std::size_t>(p[3] & 0x7F);
}

} // namespace

FrameHeader parse_frame_header(std::span<const uint8_t> four_bytes) {
    if (four_bytes.size() < 4)
        fail(ErrorKind::BadArgument, "frame header needs 4 bytes");
    const uint8_t b0 = four_bytes[0], b1 = four_bytes[1], b2 = four_bytes[2],
                  b3 = four_bytes[3];

    if (b0 != 0xFF || (b1 & 0xE0) != 0xE0)
        fail(ErrorKind::InvalidFrameHeader, "sync bits not set");

    FrameHeader h;
    switch ((b1 >> 3) & 0x3) {
    case 0: h.version = MpegVersion::Mpeg2_5; break;
    case 1: fail(ErrorKind::InvalidFrameHeader, "reserved MPEG version");
    case 2: h.version = MpegVersion::Mpeg2; break;
    case 3: h.version = MpegVersion::Mpeg1; break;
    }
    switch ((b1 >> 1) & 0x3) {
    case 0: fail(ErrorKind::InvalidFrameHeader, "reserved layer");
    case 1: h.layer = Layer::III; break;
    case 2: h.layer = Layer::II; break;
    case 3: h.layer = Layer::I; break;
    }
    h.crc_protected = (b1 & 0x1) == 0; // bit clear means a CRC16 follows

    const unsigned bitrate_index = (b2 >> 4) & 0xF;
    if (bitrate_index == 0)
        fail(ErrorKind::InvalidFrameHeader, "free-format bitrate unsupported");
    if (bitrate_index == 15) fail(ErrorKind::InvalidFrameHeader, "bad bitrate index");
    h.bitrate_kbps = bitrate_table(h.version, h.layer)[bitrate_index];

    const unsigned rate_index = (b2 >> 2) & 0x3;
    if (rate_index == 3) fail(ErrorKind::InvalidFrameHeader, "reserved sample-rate index");
    switch (h.version) {
    case MpegVersion::Mpeg1: h.sample_rate_hz = kSampleRateV1[rate_index]; break;
    case MpegVersion::Mpeg2: h.sample_rate_hz = kSampleRateV2[rate_index]; break;
    case MpegVersion::Mpeg2_5: h.sample_rate_hz = kSampleRateV2_5[rate_index]; break;
    }

    h.padding = (b2 >> 1) & 0x1;
    h.private_bit = b2 & 0x1;
    switch ((b3 >> 6) & 0x3) {
    case 0: h.channel_mode = ChannelMode::Stereo; break;
    case 1: h.channel_mode = ChannelMode::JointStereo; break;
    case 2: h.channel_mode = ChannelMode::DualChannel; break;
    case 3: h.channel_mode = ChannelMode::Mono; break;
    }
    h.mode_extension = (b3 >> 4) & 0x3;
    h.copyright = (b3 >> 3) & 0x1;
    h.original = (b3 >> 2) & 0x1;
    h.emphasis = b3 & 0x3;
    return h;
}

std::size_t frame_length(const FrameHeader& header) {
    if (header.layer != Layer::III)
        fail(ErrorKind::UnsupportedLayer, "frame walking handles Layer III only");
    const long bitrate_bps = static_cast<long>(header.bitrate_kbps) * 1000;
    const long factor = header.version == MpegVersion::Mpeg1 ? 144 : 72;
    return static_cast<std::size_t>(factor * bitrate_bps / header.sample_rate_hz) +
           (header.padding ? 1 : 0);
}

Stream parse_mp3(std::vector<uint8_t> bytes) {
    Stream s;
    s.raw = std::move(bytes);
    const std::span<const uint8_t> data(s.raw);
    std::size_t pos = 0;

    if (data.size() >= 10 && data[0] == 'I' && data[1] == 'D' && data[2] == '3') {
        std::size_t block = 10 + syncsafe_size(data.data() + 6);
        if (data[5] & 0x10) block += 10; // footer flag
        if (block > data.size()) block = data.size();
        s.id3v2 = ByteRange{0, block};
        pos = block;
    }

    std::size_t id3v1_at = std::string::npos;
    if (data.size() >= pos + 128) {
        const std::size_t tail = data.size() - 128;
        if (std::memcmp(data.data() + tail, "TAG", 3) == 0) id3v1_at = tail;
    }
    const std::size_t end = id3v1_at == std::string::npos ? data.size() : id3v1_at;

    std::size_t gap_start = std::string::npos;
    auto close_gap = [&](std::size_t at) {
        if (gap_start != std::string::npos) {
            s.gaps.push_back(ByteRange{gap_start, at - gap_start});
            gap_start = std::string::npos;
        }
    };

    while (pos < end) {
        bool walked = false;
        if (header_starts_at(data, pos)) {
            const FrameHeader h = parse_frame_header(data.subspan(pos, 4));
            if (h.layer == Layer::III) {
                const std::size_t len = frame_length(h);
                if (pos + len <= end) {
                    close_gap(pos);
                    s.frames.push_back(Frame{h, pos, len});
                    pos += len;
                    walked = true;
                }
            }
        }
        if (!walked) {
            // junk byte: open/extend a gap and rescan from the next byte
            if (gap_start == std::string::npos) gap_start = pos;
            ++pos;
        }
    }
    close_gap(end);

    if (id3v1_at != std::string::npos) s.id3v1 = ByteRange{id3v1_at, 128};
    if (s.frames.empty())
        fail(ErrorKind::NotAnMp3, "no valid frame found in " + std::to_string(s.raw.size()) +
                                      " bytes");
    return s;
}

const std::vector<uint8_t>& to_payload(const Stream& stream) { return stream.raw; }

ValidationReport validate_extracted(const std::vector<uint8_t>& bytes) {
    ValidationReport rep;
    try {
        const Stream s = parse_mp3(bytes);
        rep.valid = true;
        rep.frame_count = s.frames.size();
        for (const auto& f : s.frames) rep.frame_bytes += f.byte_length;
        rep.gap_count = s.gaps.size();
        for (const auto& g : s.gaps) rep.gap_bytes += g.length;
        rep.has_id3v2 = s.id3v2.has_value();
        rep.has_id3v1 = s.id3v1.has_value();
    } catch (const Error& e) {
        rep.valid = false;
        rep.error = e.what();
    }
    return rep;
}

std::vector<uint8_t> synthetic_frame(int bitrate_kbps, int sample_rate_hz, bool padding) {
    const std::array<int, 16>& table = kBitrateV1L3;
    unsigned bitrate_index = 0;
    for (unsigned i = 1; i < 15; ++i)
        if (table[i] == bitrate_kbps) bitrate_index = i;
    unsigned rate_index = 3;
    for (unsigned i = 0; i < 3; ++i)
        if (kSampleRateV1[i] == sample_rate_hz) rate_index = i;
    if (bitrate_index == 0 || rate_index == 3)
        fail(ErrorKind::BadArgument, "no MPEG1 Layer III header for these parameters");

    // MPEG1, Layer III, no CRC, stereo
    std::vector<uint8_t> frame(4, 0);
    frame[0] = 0xFF;
    frame[1] = 0xFB;
    frame[2] = static_cast<uint8_t>((bitrate_index << 4) | (rate_index << 2) |
                                    (padding ? 0x2 : 0x0));
    frame[3] = 0x00;
    frame.resize(frame_length(parse_frame_header(frame)), 0);
    return frame;
}

std::vector<uint8_t> synthetic_mp3(int frame_count, bool with_id3v2, bool with_id3v1,
                                   int bitrate_kbps) {
    std::vector<uint8_t> out;
    if (with_id3v2) {
        // minimal ID3v2.3 block: header only, zero content size
        const uint8_t id3[10] = {'I', 'D', '3', 3, 0, 0, 0, 0, 0, 0};
        out.insert(out.end(), id3, id3 + 10);
    }
    const auto frame = synthetic_frame(bitrate_kbps);
    for (int i = 0; i < frame_count; ++i) out.insert(out.end(), frame.begin(), frame.end());
    if (with_id3v1) {
        std::vector<uint8_t> tag(128, 0);
        tag[0] = 'T';
        tag[1] = 'A';
        tag[2] = 'G';
        out.insert(out.end(), tag.begin(), tag.end());
    }
    return out;
}

} // namespace stegocs::mp3
