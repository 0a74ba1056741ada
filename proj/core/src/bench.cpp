#include "stegocs/bench.hpp"

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>

#include "stegocs/rng.hpp"

namespace stegocs {

namespace {

constexpr uint64_t kTextureSeed = 0x7E87A5EBA800ull;
constexpr uint64_t kPayloadStream = 0x9A710AD5EEDull;

std::vector<uint8_t> cell_payload(std::size_t bytes, std::size_t image_index, uint64_t seed) {
    SplitMix64 rng(derive_seed(kPayloadStream, (static_cast<uint64_t>(image_index) << 32) ^ seed));
    std::vector<uint8_t> payload(bytes);
    for (auto& b : payload) b = static_cast<uint8_t>(rng.next() & 0xFF);
    return payload;
}

std::string format_metric(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

PixelGrid synthetic_texture_cover(int width, int height) {
    PixelGrid grid(width, height);
    SplitMix64 rng(kTextureSeed);
    for (auto& s : grid.samples()) s = static_cast<uint8_t>(rng.next() & 0xFF);
    return grid;
}

PixelGrid synthetic_smooth_cover(int width, int height) {
    PixelGrid grid(width, height);
    const int span = width + height - 2;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            grid(r, c) = static_cast<uint8_t>(span == 0 ? 0 : (r + c) * 255 / span);
    return grid;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchImage> images = config.images;
    if (images.empty()) {
        images.push_back(BenchImage{"synthetic-texture", synthetic_texture_cover()});
        images.push_back(BenchImage{"synthetic-smooth", synthetic_smooth_cover()});
    }

    std::vector<BenchRow> rows;
    rows.reserve(images.size() * 2 * static_cast<std::size_t>(config.seed_count));
    for (std::size_t i = 0; i < images.size(); ++i) {
        const auto& image = images[i];
        std::size_t payload_bytes = config.payload_bytes;
        if (payload_bytes == 0)
            payload_bytes = static_cast<std::size_t>(
                capacity_bits(image.grid, config.k, config.nest_size) / 8 / 4);

        for (const char* method : {"sequential", "cuckoo"}) {
            for (int s = 0; s < config.seed_count; ++s) {
                const auto payload = cell_payload(payload_bytes, i, static_cast<uint64_t>(s));
                CsParams params = config.params;
                params.master_seed = static_cast<uint64_t>(s);

                const auto t0 = std::chrono::steady_clock::now();
                const EmbedResult result =
                    embed(image.grid, payload, config.k, params,
                          method[0] == 's' ? EmbedMode::Sequential : EmbedMode::Cuckoo,
                          config.nest_size);
                const auto t1 = std::chrono::steady_clock::now();

                BenchRow row;
                row.image_name = image.name;
                row.method = method;
                row.k = config.k;
                row.payload_bytes = payload_bytes;
                row.report = result.report;
                row.wall_time_ms =
                    config.record_time
                        ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                        : 0.0;
                row.seed = static_cast<uint64_t>(s);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::vector<BenchSummaryRow> summarize(const std::vector<BenchRow>& rows) {
    // keyed by first appearance so summary order follows row order
    std::vector<BenchSummaryRow> out;
    std::map<std::string, std::size_t> index;
    std::map<std::string, std::pair<double, int>> seq, cuc;
    for (const auto& row : rows) {
        if (!index.contains(row.image_name)) {
            index[row.image_name] = out.size();
            out.push_back(BenchSummaryRow{row.image_name, 0.0, 0.0});
        }
        auto& acc = row.method == "sequential" ? seq[row.image_name] : cuc[row.image_name];
        acc.first += row.report.z;
        acc.second += 1;
    }
    for (auto& s : out) {
        if (seq[s.image].second) s.mean_z_sequential = seq[s.image].first / seq[s.image].second;
        if (cuc[s.image].second) s.mean_z_cuckoo = cuc[s.image].first / cuc[s.image].second;
    }
    return out;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
    std::string csv = "image,method,k,payload_bytes,mse,psnr_db,ssim,z,wall_time_ms,seed\n";
    for (const auto& row : rows) {
        csv += csv_escape(row.image_name);
        csv += ',';
        csv += row.method;
        csv += ',';
        csv += std::to_string(row.k);
        csv += ',';
        csv += std::to_string(row.payload_bytes);
        csv += ',';
        csv += format_metric(row.report.mse);
        csv += ',';
        csv += format_metric(row.report.psnr_db);
        csv += ',';
        csv += format_metric(row.report.ssim);
        csv += ',';
        csv += format_metric(row.report.z);
        csv += ',';
        csv += format_metric(row.wall_time_ms);
        csv += ',';
        csv += std::to_string(row.seed);
        csv += '\n';
    }
    return csv;
}

} // namespace stegocs
