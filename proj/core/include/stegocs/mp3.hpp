#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stegocs/error.hpp"

namespace stegocs::mp3 {

enum class MpegVersion { Mpeg1, Mpeg2, Mpeg2_5 };
enum class Layer { I, II, III };
enum class ChannelMode { Stereo, JointStereo, DualChannel, Mono };

// Decoded 32-bit frame header: AAAAAAAA AAABBCCD EEEEFFGH IIJJKLMM
// (sync, version, layer, crc, bitrate idx, samplerate idx, padding,
// private, channel, mode ext, copyright, original, emphasis).
struct FrameHeader {
    MpegVersion version = MpegVersion::Mpeg1;
    Layer layer = Layer::III;
    bool crc_protected = false;
    int bitrate_kbps = 0;
    int sample_rate_hz = 0;
    bool padding = false;
    bool private_bit = false;
    ChannelMode channel_mode = ChannelMode::Stereo;
    uint8_t mode_extension = 0;
    bool copyright = false;
    bool original = false;
    uint8_t emphasis = 0;
};

struct Frame {
    FrameHeader header;
    std::size_t byte_offset = 0;
    std::size_t byte_length = 0; // includes the 4 header bytes
};

struct ByteRange {
    std::size_t offset = 0;
    std::size_t length = 0;
};

// Parsed file: ID3v2 | frames (+ recorded junk gaps) | ID3v1. The segments
// concatenated with the gaps reproduce raw byte for byte.
struct Stream {
    std::optional<ByteRange> id3v2;
    std::vector<Frame> frames;
    std::optional<ByteRange> id3v1;
    std::vector<ByteRange> gaps;
    std::vector<uint8_t> raw;
};

struct ValidationReport {
    bool valid = false;
    std::size_t frame_count = 0;
    std::size_t frame_bytes = 0;
    std::size_t gap_count = 0;
    std::size_t gap_bytes = 0;
    bool has_id3v2 = false;
    bool has_id3v1 = false;
    std::string error; // parse failure reason when !valid
};

FrameHeader parse_frame_header(std::span<const uint8_t> four_bytes);

// Layer III frame size in bytes including the header:
//   MPEG1:      floor(144 * bitrate_bps / sample_rate) + padding
//   MPEG2/2.5:  floor( 72 * bitrate_bps / sample_rate) + padding
// Layers I/II are out of scope and raise UnsupportedLayer.
std::size_t frame_length(const FrameHeader& header);

Stream parse_mp3(std::vector<uint8_t> bytes);

// the embedded payload is the whole file, headers and metadata intact
const std::vector<uint8_t>& to_payload(const Stream& stream);

ValidationReport validate_extracted(const std::vector<uint8_t>& bytes);

// Deterministic synthetic fixtures so tests need no real audio.
// A frame is a valid header plus zero fill to its computed length.
std::vector<uint8_t> synthetic_frame(int bitrate_kbps = 128, int sample_rate_hz = 44100,
                                     bool padding = false);
std::vector<uint8_t> synthetic_mp3(int frame_count, bool with_id3v2 = false,
                                   bool with_id3v1 = false, int bitrate_kbps = 128);

} // namespace stegocs::mp3
