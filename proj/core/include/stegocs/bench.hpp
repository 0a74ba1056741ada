#pragma once

#include <string>
#include <vector>

#include "stegocs/pipeline.hpp"

namespace stegocs {

struct BenchRow {
    std::string image_name;
    std::string method; // "sequential" | "cuckoo"
    int k = 1;
    std::size_t payload_bytes = 0;
    QualityReport report;
    double wall_time_ms = 0.0;
    uint64_t seed = 0;
};

struct BenchImage {
    std::string name;
    PixelGrid grid;
};

struct BenchConfig {
    std::vector<BenchImage> images; // empty -> the two synthetic covers
    std::size_t payload_bytes = 0;  // 0 -> quarter capacity per image
    int k = 1;
    int seed_count = 5;             // master seeds 0..seed_count-1
    int nest_size = 16;
    CsParams params;                // master_seed is overwritten per cell
    bool record_time = false;       // measured timings break byte-identical reruns
};

struct BenchSummaryRow {
    std::string image;
    double mean_z_sequential = 0.0;
    double mean_z_cuckoo = 0.0;
};

// Stand-ins for the classic test images, generated from fixed formulas so
// the repo ships no image assets: a seeded-noise texture and a smooth
// diagonal gradient.
PixelGrid synthetic_texture_cover(int width = 512, int height = 512);
PixelGrid synthetic_smooth_cover(int width = 512, int height = 512);

// Runs embed + analyze for every image x method x seed cell. The payload of
// a cell depends only on (image, seed), so the two methods see identical
// payloads and rows reproduce run to run.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::vector<BenchSummaryRow> summarize(const std::vector<BenchRow>& rows);

// RFC-4180-style; header row + one line per row, LF line endings
std::string rows_to_csv(const std::vector<BenchRow>& rows);

} // namespace stegocs
