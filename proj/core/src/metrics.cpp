#include "stegocs/metrics.hpp"

#include <cmath>
#include <string>

namespace stegocs {

namespace {

void check_same_size(const PixelGrid& a, const PixelGrid& b) {
    if (a.width() != b.width() || a.height() != b.height())
        fail(ErrorKind::DimensionMismatch,
             std::to_string(a.width()) + "x" + std::to_string(a.height()) + " vs " +
                 std::to_string(b.width()) + "x" + std::to_string(b.height()));
}

// SSIM over one rectangular window; offsets address the same window in both
// grids (they share dimensions). Population moments, divide by N.
double ssim_window(const PixelGrid& a, const PixelGrid& b, int row0, int col0, int h, int w,
                   const SsimConstants& consts) {
    const std::size_t n = static_cast<std::size_t>(h) * w;
    long long sum_a = 0, sum_b = 0;
    long long sum_aa = 0, sum_bb = 0, sum_ab = 0;
    for (int r = 0; r < h; ++r) {
        const uint8_t* pa = a.samples().data() + static_cast<std::size_t>(row0 + r) * a.width() + col0;
        const uint8_t* pb = b.samples().data() + static_cast<std::size_t>(row0 + r) * b.width() + col0;
        for (int c = 0; c < w; ++c) {
            const int va = pa[c], vb = pb[c];
            sum_a += va;
            sum_b += vb;
            sum_aa += va * va;
            sum_bb += vb * vb;
            sum_ab += va * vb;
        }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    const double mu_a = sum_a * inv_n;
    const double mu_b = sum_b * inv_n;
    const double var_a = sum_aa * inv_n - mu_a * mu_a;
    const double var_b = sum_bb * inv_n - mu_b * mu_b;
    const double cov = sum_ab * inv_n - mu_a * mu_b;
    return ((2.0 * mu_a * mu_b + consts.c1) * (2.0 * cov + consts.c2)) /
           ((mu_a * mu_a + mu_b * mu_b + consts.c1) * (var_a + var_b + consts.c2));
}

} // namespace

double mse(const PixelGrid& a, const PixelGrid& b) {
    check_same_size(a, b);
    if (a.size() == 0) return 0.0;
    // max per-pixel square is 255^2; 2^63 / 65025 pixels before overflow
    long long acc = 0;
    const uint8_t* pa = a.samples().data();
    const uint8_t* pb = b.samples().data();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int d = static_cast<int>(pa[i]) - static_cast<int>(pb[i]);
        acc += d * d;
    }
    return static_cast<double>(acc) / static_cast<double>(a.size());
}

double psnr(const PixelGrid& a, const PixelGrid& b) {
    const double m = mse(a, b);
    if (m == 0.0) return kPsnrInfinite;
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

double ssim(const PixelGrid& a, const PixelGrid& b, const SsimConstants& consts) {
    check_same_size(a, b);
    if (consts.c1 <= 0.0 || consts.c2 <= 0.0)
        fail(ErrorKind::BadArgument, "ssim constants must be positive");
    if (a.size() == 0) return 1.0;
    return ssim_window(a, b, 0, 0, a.height(), a.width(), consts);
}

double ssim_global(const PixelGrid& a, const PixelGrid& b, const SsimConstants& consts, int tile) {
    check_same_size(a, b);
    if (tile < 1) fail(ErrorKind::BadArgument, "tile must be >= 1");
    const int rows = a.height() / tile;
    const int cols = a.width() / tile;
    if (rows == 0 || cols == 0) return ssim(a, b, consts);
    double acc = 0.0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            acc += ssim_window(a, b, r * tile, c * tile, tile, tile, consts);
    return acc / (static_cast<double>(rows) * cols);
}

double fitness_z(const PixelGrid& candidate, const PixelGrid& original, double alpha,
                 const SsimConstants& consts, int tile) {
    if (alpha < 0.0 || alpha > 1.0) fail(ErrorKind::BadArgument, "alpha must be in [0,1]");
    const double s = ssim_global(candidate, original, consts, tile);
    double p = psnr(candidate, original);
    if (p > kPsnrCap) p = kPsnrCap;
    return alpha * s + (1.0 - alpha) * p;
}

QualityReport quality_report(const PixelGrid& cover, const PixelGrid& stego, double alpha,
                             const SsimConstants& consts, int tile) {
    QualityReport rep;
    rep.mse = mse(cover, stego);
    rep.psnr_db = psnr(cover, stego);
    rep.ssim = ssim_global(cover, stego, consts, tile);
    double p = rep.psnr_db > kPsnrCap ? kPsnrCap : rep.psnr_db;
    rep.z = alpha * rep.ssim + (1.0 - alpha) * p;
    return rep;
}

} // namespace stegocs
