#include <doctest.h>

#include "stegocs/mp3.hpp"
#include "test_util.hpp"

using namespace stegocs;
using namespace stegocs::mp3;

namespace {

FrameHeader decode(uint8_t b0, uint8_t b1, uint8_t b2, uint8_t b3) {
    const uint8_t bytes[4] = {b0, b1, b2, b3};
    return parse_frame_header(bytes);
}

ErrorKind decode_error(uint8_t b0, uint8_t b1, uint8_t b2, uint8_t b3) {
    try {
        decode(b0, b1, b2, b3);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::BadArgument; // not reached for the fixtures below
}

} // namespace

TEST_CASE("parse_frame_header decodes FF FB 90 00") {
    const FrameHeader h = decode(0xFF, 0xFB, 0x90, 0x00);
    CHECK(h.version == MpegVersion::Mpeg1);
    CHECK(h.layer == Layer::III);
    CHECK_FALSE(h.crc_protected);
    CHECK(h.bitrate_kbps == 128);
    CHECK(h.sample_rate_hz == 44100);
    CHECK_FALSE(h.padding);
    CHECK_FALSE(h.private_bit);
    CHECK(h.channel_mode == ChannelMode::Stereo);
    CHECK(h.mode_extension == 0);
    CHECK_FALSE(h.copyright);
    CHECK_FALSE(h.original);
    CHECK(h.emphasis == 0);
}

TEST_CASE("parse_frame_header resolves the MPEG1 Layer III bitrate table") {
    CHECK(decode(0xFF, 0xFB, 0xB0, 0x00).bitrate_kbps == 192); // index 1011
    CHECK(decode(0xFF, 0xFB, 0xC0, 0x00).bitrate_kbps == 224); // index 1100
    CHECK(decode(0xFF, 0xFB, 0x10, 0x00).bitrate_kbps == 32);  // index 0001
    CHECK(decode(0xFF, 0xFB, 0xE0, 0x00).bitrate_kbps == 320); // index 1110
    CHECK(decode(0xFF, 0xFB, 0x94, 0x00).sample_rate_hz == 48000);
    CHECK(decode(0xFF, 0xFB, 0x98, 0x00).sample_rate_hz == 32000);
}

TEST_CASE("parse_frame_header decodes the flag fields") {
    const FrameHeader h = decode(0xFF, 0xFA, 0x93, 0xFF); // crc bit clear, padding+private
    CHECK(h.crc_protected);
    CHECK(h.padding);
    CHECK(h.private_bit);
    CHECK(h.channel_mode == ChannelMode::Mono);
    CHECK(h.mode_extension == 3);
    CHECK(h.copyright);
    CHECK(h.original);
    CHECK(h.emphasis == 3);

    CHECK(decode(0xFF, 0xF3, 0x90, 0x00).version == MpegVersion::Mpeg2);
    CHECK(decode(0xFF, 0xE3, 0x90, 0x00).version == MpegVersion::Mpeg2_5);
    CHECK(decode(0xFF, 0xE3, 0x90, 0x00).sample_rate_hz == 11025);
    CHECK(decode(0xFF, 0xFD, 0x90, 0x00).layer == Layer::II);
    CHECK(decode(0xFF, 0xFF, 0x90, 0x40).channel_mode == ChannelMode::JointStereo);
}

TEST_CASE("parse_frame_header reports each invalid field distinctly") {
    CHECK(decode_error(0x00, 0x00, 0x00, 0x00) == ErrorKind::InvalidFrameHeader); // sync
    CHECK(decode_error(0xFF, 0x7B, 0x90, 0x00) == ErrorKind::InvalidFrameHeader); // sync
    CHECK(decode_error(0xFF, 0xEB, 0x90, 0x00) == ErrorKind::InvalidFrameHeader); // version
    CHECK(decode_error(0xFF, 0xF9, 0x90, 0x00) == ErrorKind::InvalidFrameHeader); // layer
    CHECK(decode_error(0xFF, 0xFB, 0x00, 0x00) == ErrorKind::InvalidFrameHeader); // free
    CHECK(decode_error(0xFF, 0xFB, 0xF0, 0x00) == ErrorKind::InvalidFrameHeader); // bad rate
    CHECK(decode_error(0xFF, 0xFB, 0x9C, 0x00) == ErrorKind::InvalidFrameHeader); // samplerate
}

TEST_CASE("frame_length matches the published 417/626 byte sizes") {
    FrameHeader h = decode(0xFF, 0xFB, 0x90, 0x00); // 128 kbps, 44100
    CHECK(frame_length(h) == 417);
    h.padding = true;
    CHECK(frame_length(h) == 418);
    CHECK(frame_length(decode(0xFF, 0xFB, 0xB0, 0x00)) == 626); // 192 kbps
    // MPEG2 Layer III, 80 kbps at 22050 Hz, halved factor
    CHECK(frame_length(decode(0xFF, 0xF3, 0x90, 0x00)) == 72 * 80000 / 22050);

    FrameHeader layer2 = decode(0xFF, 0xFD, 0x90, 0x00);
    CHECK_THROWS_AS(frame_length(layer2), Error);
}

TEST_CASE("parse_mp3 walks a single-frame fixture") {
    const auto bytes = synthetic_mp3(1);
    REQUIRE(bytes.size() == 417);
    const Stream s = parse_mp3(bytes);
    REQUIRE(s.frames.size() == 1);
    CHECK(s.frames[0].byte_offset == 0);
    CHECK(s.frames[0].byte_length == 417);
    CHECK_FALSE(s.id3v2.has_value());
    CHECK_FALSE(s.id3v1.has_value());
    CHECK(s.gaps.empty());
}

TEST_CASE("parse_mp3 recognizes the ID3 blocks") {
    const auto bytes = synthetic_mp3(3, true, true);
    const Stream s = parse_mp3(bytes);
    REQUIRE(s.id3v2.has_value());
    CHECK(s.id3v2->offset == 0);
    CHECK(s.id3v2->length == 10);
    REQUIRE(s.frames.size() == 3);
    CHECK(s.frames[0].byte_offset == 10);
    REQUIRE(s.id3v1.has_value());
    CHECK(s.id3v1->offset == bytes.size() - 128);
    CHECK(s.id3v1->length == 128);

    SUBCASE("segments plus gaps cover the file exactly") {
        std::size_t covered = s.id3v2->length + s.id3v1->length;
        for (const auto& f : s.frames) covered += f.byte_length;
        for (const auto& g : s.gaps) covered += g.length;
        CHECK(covered == bytes.size());
    }
}

TEST_CASE("parse_mp3 records junk bytes as gaps") {
    auto frame = synthetic_frame();
    std::vector<uint8_t> bytes(5, 0x11);
    bytes.insert(bytes.end(), frame.begin(), frame.end());
    bytes.insert(bytes.end(), 3, 0x22);
    bytes.insert(bytes.end(), frame.begin(), frame.end());

    const Stream s = parse_mp3(bytes);
    REQUIRE(s.frames.size() == 2);
    CHECK(s.frames[0].byte_offset == 5);
    CHECK(s.frames[1].byte_offset == 5 + 417 + 3);
    REQUIRE(s.gaps.size() == 2);
    CHECK(s.gaps[0].offset == 0);
    CHECK(s.gaps[0].length == 5);
    CHECK(s.gaps[1].offset == 422);
    CHECK(s.gaps[1].length == 3);
}

TEST_CASE("frame walk is contiguous when there are no gaps") {
    const auto bytes = synthetic_mp3(5);
    const Stream s = parse_mp3(bytes);
    REQUIRE(s.frames.size() == 5);
    for (std::size_t i = 1; i < s.frames.size(); ++i)
        CHECK(s.frames[i].byte_offset ==
              s.frames[i - 1].byte_offset + s.frames[i - 1].byte_length);
}

TEST_CASE("parse_mp3 rejects sync-free noise") {
    auto bytes = testutil::random_bytes(4096, 55);
    for (auto& b : bytes) b &= 0x7F; // no byte can start a sync word
    try {
        parse_mp3(bytes);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAnMp3);
    }
}

TEST_CASE("to_payload is the identity over the raw bytes") {
    const auto bytes = synthetic_mp3(2, true, false);
    const Stream s = parse_mp3(bytes);
    CHECK(to_payload(s) == bytes);

    const Stream reparsed = parse_mp3(to_payload(s));
    CHECK(reparsed.frames.size() == s.frames.size());
    CHECK(reparsed.id3v2.has_value() == s.id3v2.has_value());
}

TEST_CASE("validate_extracted") {
    SUBCASE("clean copy validates") {
        const ValidationReport rep = validate_extracted(synthetic_mp3(1));
        CHECK(rep.valid);
        CHECK(rep.frame_count == 1);
        CHECK(rep.frame_bytes == 417);
        CHECK(rep.gap_count == 0);
    }
    SUBCASE("a flipped sync bit drops a frame into gaps") {
        auto bytes = synthetic_mp3(3);
        bytes[417] = 0x7F; // second frame's first sync byte
        const ValidationReport rep = validate_extracted(bytes);
        CHECK(rep.valid);
        CHECK(rep.frame_count == 2);
        CHECK(rep.gap_bytes == 417);
    }
    SUBCASE("empty input is invalid") {
        const ValidationReport rep = validate_extracted({});
        CHECK_FALSE(rep.valid);
        CHECK(rep.frame_count == 0);
        CHECK_FALSE(rep.error.empty());
    }
}
