#include "stegocs/error.hpp"

namespace stegocs {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::BadArgument: return "bad argument";
    case ErrorKind::UnsupportedFormat: return "unsupported format";
    case ErrorKind::BadMaxval: return "bad maxval";
    case ErrorKind::BadBitDepth: return "bad bit depth";
    case ErrorKind::TruncatedFile: return "truncated file";
    case ErrorKind::IoFailure: return "i/o failure";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::CapacityExceeded: return "capacity exceeded";
    case ErrorKind::EmptyPayload: return "empty payload";
    case ErrorKind::NotAnMp3: return "not an mp3";
    case ErrorKind::InvalidFrameHeader: return "invalid frame header";
    case ErrorKind::UnsupportedLayer: return "unsupported layer";
    case ErrorKind::KeyFormat: return "key format";
    case ErrorKind::KeyVersionMismatch: return "key version mismatch";
    case ErrorKind::CrcMismatch: return "crc mismatch";
    case ErrorKind::NestOutOfBounds: return "nest out of bounds";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace stegocs
