#pragma once

#include <stdexcept>
#include <string>

namespace stegocs {

enum class ErrorKind {
    BadArgument,        // invalid parameter value (k out of range, bad lambda, ...)
    UnsupportedFormat,  // file is not a format we read/write
    BadMaxval,          // PGM maxval != 255
    BadBitDepth,        // PNG bit depth != 8
    TruncatedFile,      // file ends before its header promises
    IoFailure,          // OS-level read/write failure
    DimensionMismatch,  // two grids of different size where equal sizes required
    CapacityExceeded,   // payload does not fit the cover
    EmptyPayload,
    NotAnMp3,           // no valid frame anywhere in the byte stream
    InvalidFrameHeader, // sync/bitrate/samplerate/layer field invalid
    UnsupportedLayer,   // frame walking implemented for Layer III only
    KeyFormat,          // stego-key bytes malformed
    KeyVersionMismatch,
    CrcMismatch,        // extracted payload fails its checksum
    NestOutOfBounds,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

} // namespace stegocs
