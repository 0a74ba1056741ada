#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "stegocs/error.hpp"

namespace stegocs {

// 8-bit grayscale raster, row-major. Immutable by convention once built:
// read paths share it freely, mutation happens on explicit copies.
class PixelGrid {
public:
    PixelGrid() = default;
    PixelGrid(int width, int height); // zero-filled
    PixelGrid(int width, int height, std::vector<uint8_t> samples);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return samples_.size(); }

    uint8_t operator()(int row, int col) const {
        return samples_[static_cast<std::size_t>(row) * width_ + col];
    }
    uint8_t& operator()(int row, int col) {
        return samples_[static_cast<std::size_t>(row) * width_ + col];
    }

    const std::vector<uint8_t>& samples() const { return samples_; }
    std::vector<uint8_t>& samples() { return samples_; }

    bool operator==(const PixelGrid&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<uint8_t> samples_;
};

// One non-overlapping square window ("nest"): pixels
// [row*nest_size, row*nest_size+nest_size) x [col*nest_size, ...).
struct NestIndex {
    int row = 0;
    int col = 0;
    int nest_size = 0;

    bool operator==(const NestIndex&) const = default;
};

// Formats: binary PGM (P5, maxval 255) and 8-bit grayscale PNG. Both are
// lossless; load(save(g)) == g sample-for-sample. Loading sniffs the magic
// bytes, saving picks the writer from the extension (.pgm / .png).
PixelGrid load_image(const std::filesystem::path& path);
void save_image(const PixelGrid& grid, const std::filesystem::path& path);

// Whole nests in row-major order; border pixels not covered by a whole nest
// belong to no nest.
std::vector<NestIndex> nests(const PixelGrid& grid, int nest_size);

PixelGrid extract_nest(const PixelGrid& grid, const NestIndex& nest);
void write_nest(PixelGrid& grid, const NestIndex& nest, const PixelGrid& block);

} // namespace stegocs
