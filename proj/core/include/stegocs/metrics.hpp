#pragma once

#include <limits>

#include "stegocs/image.hpp"

namespace stegocs {

// psnr() reports this sentinel for identical inputs; inside fitness_z it is
// replaced by kPsnrCap so the fitness stays finite and totally ordered.
inline constexpr double kPsnrInfinite = std::numeric_limits<double>::infinity();
inline constexpr double kPsnrCap = 100.0;

inline constexpr int kDefaultSsimTile = 8;

// c1 = (0.01*255)^2, c2 = (0.03*255)^2 — the conventional stabilizers.
struct SsimConstants {
    double c1 = 6.5025;
    double c2 = 58.5225;
};

struct QualityReport {
    double mse = 0.0;
    double psnr_db = kPsnrInfinite;
    double ssim = 1.0;
    double z = 0.0;
};

double mse(const PixelGrid& a, const PixelGrid& b);

// 10*log10(255^2 / mse); kPsnrInfinite when mse == 0
double psnr(const PixelGrid& a, const PixelGrid& b);

// single-window SSIM over the full extent, population statistics
double ssim(const PixelGrid& a, const PixelGrid& b, const SsimConstants& consts = {});

// mean single-window SSIM over non-overlapping tile x tile windows (border
// remainder ignored); falls back to one full-extent window when the region
// is smaller than a tile
double ssim_global(const PixelGrid& a, const PixelGrid& b, const SsimConstants& consts = {},
                   int tile = kDefaultSsimTile);

// Z = alpha * ssim_global + (1 - alpha) * psnr, psnr capped at kPsnrCap
double fitness_z(const PixelGrid& candidate, const PixelGrid& original, double alpha = 0.5,
                 const SsimConstants& consts = {}, int tile = kDefaultSsimTile);

QualityReport quality_report(const PixelGrid& cover, const PixelGrid& stego, double alpha = 0.5,
                             const SsimConstants& consts = {}, int tile = kDefaultSsimTile);

} // namespace stegocs
