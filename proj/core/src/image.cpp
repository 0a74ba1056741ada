#include "stegocs/image.hpp"

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include <png.h>

namespace stegocs {

PixelGrid::PixelGrid(int width, int height)
    : width_(width), height_(height),
      samples_(static_cast<std::size_t>(width) * height, 0) {
    if (width < 0 || height < 0)
        fail(ErrorKind::BadArgument, "negative image dimensions");
}

PixelGrid::PixelGrid(int width, int height, std::vector<uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
    if (width < 0 || height < 0)
        fail(ErrorKind::BadArgument, "negative image dimensions");
    if (samples_.size() != static_cast<std::size_t>(width) * height)
        fail(ErrorKind::BadArgument,
             "sample count " + std::to_string(samples_.size()) + " != " +
                 std::to_string(width) + "x" + std::to_string(height));
}

namespace {

// ---- PGM (binary P5) ----

int pgm_next_int(std::istream& in) {
    // netpbm token scan: whitespace separates fields, '#' starts a comment
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c))
        fail(ErrorKind::TruncatedFile, "pgm header ends early");
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 30) fail(ErrorKind::UnsupportedFormat, "pgm header field too large");
        c = in.get();
    }
    return static_cast<int>(value);
}

PixelGrid load_pgm(std::istream& in, const std::string& name) {
    char magic[2];
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5')
        fail(ErrorKind::UnsupportedFormat, name + ": not a binary PGM (P5)");
    int width = pgm_next_int(in);
    int height = pgm_next_int(in);
    int maxval = pgm_next_int(in);
    if (maxval != 255)
        fail(ErrorKind::BadMaxval, name + ": maxval " + std::to_string(maxval) + ", need 255");
    // exactly one whitespace byte separates the header from the raster
    std::vector<uint8_t> samples(static_cast<std::size_t>(width) * height);
    in.read(reinterpret_cast<char*>(samples.data()),
            static_cast<std::streamsize>(samples.size()));
    if (in.gcount() != static_cast<std::streamsize>(samples.size()))
        fail(ErrorKind::TruncatedFile,
             name + ": raster has " + std::to_string(in.gcount()) + " of " +
                 std::to_string(samples.size()) + " bytes");
    return PixelGrid(width, height, std::move(samples));
}

void save_pgm(const PixelGrid& grid, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::IoFailure, "cannot open " + path.string() + " for writing");
    out << "P5\n" << grid.width() << " " << grid.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(grid.samples().data()),
              static_cast<std::streamsize>(grid.size()));
    if (!out) fail(ErrorKind::IoFailure, "write failed: " + path.string());
}

// ---- PNG (libpng, 8-bit grayscale) ----

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

struct FileHandle {
    FILE* f = nullptr;
    explicit FileHandle(const std::filesystem::path& path, const char* mode)
        : f(std::fopen(path.string().c_str(), mode)) {}
    ~FileHandle() {
        if (f) std::fclose(f);
    }
};

PixelGrid load_png(const std::filesystem::path& path) {
    FileHandle fh(path, "rb");
    if (!fh.f) fail(ErrorKind::IoFailure, "cannot open " + path.string());

    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) fail(ErrorKind::IoFailure, "libpng init failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) fail(ErrorKind::IoFailure, "libpng init failed");
    if (setjmp(png_jmpbuf(r.png)))
        fail(ErrorKind::TruncatedFile, path.string() + ": png decode failed");

    png_init_io(r.png, fh.f);
    png_read_info(r.png, r.info);

    const int bit_depth = png_get_bit_depth(r.png, r.info);
    const int color_type = png_get_color_type(r.png, r.info);
    if (color_type != PNG_COLOR_TYPE_GRAY)
        fail(ErrorKind::UnsupportedFormat, path.string() + ": png is not plain grayscale");
    if (bit_depth != 8)
        fail(ErrorKind::BadBitDepth,
             path.string() + ": png bit depth " + std::to_string(bit_depth) + ", need 8");

    const int width = static_cast<int>(png_get_image_width(r.png, r.info));
    const int height = static_cast<int>(png_get_image_height(r.png, r.info));
    png_set_interlace_handling(r.png);
    png_read_update_info(r.png, r.info);

    PixelGrid grid(width, height);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y)
        rows[y] = grid.samples().data() + static_cast<std::size_t>(y) * width;
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return grid;
}

void save_png(const PixelGrid& grid, const std::filesystem::path& path) {
    FileHandle fh(path, "wb");
    if (!fh.f) fail(ErrorKind::IoFailure, "cannot open " + path.string() + " for writing");

    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!w.png) fail(ErrorKind::IoFailure, "libpng init failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) fail(ErrorKind::IoFailure, "libpng init failed");
    if (setjmp(png_jmpbuf(w.png)))
        fail(ErrorKind::IoFailure, "png encode failed: " + path.string());

    png_init_io(w.png, fh.f);
    png_set_IHDR(w.png, w.info, static_cast<png_uint_32>(grid.width()),
                 static_cast<png_uint_32>(grid.height()), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);

    std::vector<png_const_bytep> rows(grid.height());
    for (int y = 0; y < grid.height(); ++y)
        rows[y] = grid.samples().data() + static_cast<std::size_t>(y) * grid.width();
    png_write_image(w.png, const_cast<png_bytepp>(rows.data()));
    png_write_end(w.png, nullptr);
}

} // namespace

PixelGrid load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::IoFailure, "cannot open " + path.string());
    uint8_t magic[8] = {};
    in.read(reinterpret_cast<char*>(magic), sizeof magic);
    const std::streamsize got = in.gcount();

    static const uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) {
        in.close();
        return load_png(path);
    }
    if (got >= 2 && magic[0] == 'P' && magic[1] == '5') {
        in.clear();
        in.seekg(0);
        return load_pgm(in, path.string());
    }
    fail(ErrorKind::UnsupportedFormat, path.string() + ": neither PGM(P5) nor PNG");
}

void save_image(const PixelGrid& grid, const std::filesystem::path& path) {
    auto ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".png") {
        save_png(grid, path);
    } else if (ext == ".pgm") {
        save_pgm(grid, path);
    } else {
        fail(ErrorKind::UnsupportedFormat, path.string() + ": write .pgm or .png");
    }
}

std::vector<NestIndex> nests(const PixelGrid& grid, int nest_size) {
    if (nest_size < 2) fail(ErrorKind::BadArgument, "nest_size must be >= 2");
    const int rows = grid.height() / nest_size;
    const int cols = grid.width() / nest_size;
    if (rows == 0 || cols == 0)
        fail(ErrorKind::BadArgument, "nest_size " + std::to_string(nest_size) +
                                         " exceeds image " + std::to_string(grid.width()) + "x" +
                                         std::to_string(grid.height()));
    std::vector<NestIndex> out;
    out.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.push_back(NestIndex{r, c, nest_size});
    return out;
}

namespace {
void check_nest_bounds(const PixelGrid& grid, const NestIndex& nest) {
    const long r0 = static_cast<long>(nest.row) * nest.nest_size;
    const long c0 = static_cast<long>(nest.col) * nest.nest_size;
    if (nest.nest_size < 1 || nest.row < 0 || nest.col < 0 ||
        r0 + nest.nest_size > grid.height() || c0 + nest.nest_size > grid.width())
        fail(ErrorKind::NestOutOfBounds,
             "nest (" + std::to_string(nest.row) + "," + std::to_string(nest.col) + ") size " +
                 std::to_string(nest.nest_size) + " outside " + std::to_string(grid.width()) +
                 "x" + std::to_string(grid.height()));
}
} // namespace

PixelGrid extract_nest(const PixelGrid& grid, const NestIndex& nest) {
    check_nest_bounds(grid, nest);
    PixelGrid block(nest.nest_size, nest.nest_size);
    const int r0 = nest.row * nest.nest_size;
    const int c0 = nest.col * nest.nest_size;
    for (int r = 0; r < nest.nest_size; ++r)
        std::memcpy(block.samples().data() + static_cast<std::size_t>(r) * nest.nest_size,
                    grid.samples().data() + static_cast<std::size_t>(r0 + r) * grid.width() + c0,
                    static_cast<std::size_t>(nest.nest_size));
    return block;
}

void write_nest(PixelGrid& grid, const NestIndex& nest, const PixelGrid& block) {
    check_nest_bounds(grid, nest);
    if (block.width() != nest.nest_size || block.height() != nest.nest_size)
        fail(ErrorKind::DimensionMismatch, "block does not match nest size");
    const int r0 = nest.row * nest.nest_size;
    const int c0 = nest.col * nest.nest_size;
    for (int r = 0; r < nest.nest_size; ++r)
        std::memcpy(grid.samples().data() + static_cast<std::size_t>(r0 + r) * grid.width() + c0,
                    block.samples().data() + static_cast<std::size_t>(r) * nest.nest_size,
                    static_cast<std::size_t>(nest.nest_size));
}

} // namespace stegocs
