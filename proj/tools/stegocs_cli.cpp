// stegocs command line: embed / extract / analyze / bench.
// Exit codes: 0 ok, 1 capacity, 2 i/o or format, 3 bad flags, 4 crc mismatch.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stegocs/bench.hpp"
#include "stegocs/pipeline.hpp"

namespace {

using namespace stegocs;

constexpr int kExitCapacity = 1;
constexpr int kExitIo = 2;
constexpr int kExitFlags = 3;
constexpr int kExitCrc = 4;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::CapacityExceeded: return kExitCapacity;
    case ErrorKind::CrcMismatch: return kExitCrc;
    case ErrorKind::BadArgument:
    case ErrorKind::DimensionMismatch: return kExitFlags;
    default: return kExitIo;
    }
}

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::IoFailure, "cannot open " + path.string());
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::IoFailure, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(ErrorKind::IoFailure, "write failed: " + path.string());
}

std::string metric(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void print_report(const QualityReport& rep) {
    std::cout << "mse=" << metric(rep.mse) << "\n"
              << "psnr_db=" << metric(rep.psnr_db) << "\n"
              << "ssim=" << metric(rep.ssim) << "\n"
              << "z=" << metric(rep.z) << "\n";
}

void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<NestOptimization>& trace) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::IoFailure, "cannot open " + path.string() + " for writing");
    out << "generation,nest_index,best_z\n";
    for (std::size_t nest = 0; nest < trace.size(); ++nest)
        for (std::size_t gen = 0; gen < trace[nest].trace.size(); ++gen)
            out << gen << ',' << nest << ',' << metric(trace[nest].trace[gen]) << '\n';
}

struct EmbedArgs {
    std::string cover, payload, out, key, trace;
    bool mp3 = false;
    int k = 1;
    std::string mode = "cuckoo";
    int nest_size = 16;
    double alpha = 0.5, pa = 0.25, lambda = 1.5;
    int pop = 15, gens = 200;
    uint64_t seed = 0;
};

int run_embed(const EmbedArgs& args) {
    const PixelGrid cover = load_image(args.cover);
    const std::vector<uint8_t> payload = read_file(args.payload);

    CsParams params;
    params.population = args.pop;
    params.p_a = args.pa;
    params.alpha_step = 1.0;
    params.lambda = args.lambda;
    params.max_generations = args.gens;
    params.master_seed = args.seed;
    params.alpha_weight = args.alpha;
    const EmbedMode mode =
        args.mode == "sequential" ? EmbedMode::Sequential : EmbedMode::Cuckoo;

    const EmbedResult result =
        args.mp3 ? embed_mp3(cover, payload, args.k, params, mode, args.nest_size)
                 : embed(cover, payload, args.k, params, mode, args.nest_size);

    save_image(result.stego, args.out);
    save_key(result.key, args.key);
    if (!args.trace.empty()) write_trace_csv(args.trace, result.trace);

    print_report(result.report);
    if (result.mp3_frames) std::cout << "frames=" << *result.mp3_frames << "\n";
    return 0;
}

struct ExtractArgs {
    std::string stego, key, out;
    bool validate_mp3 = false;
};

int run_extract(const ExtractArgs& args) {
    const PixelGrid stego = load_image(args.stego);
    const StegoKey key = load_key(args.key);
    const std::vector<uint8_t> payload = extract(stego, key);
    write_file(args.out, payload);
    if (args.validate_mp3) {
        const mp3::ValidationReport rep = mp3::validate_extracted(payload);
        std::cout << "mp3_valid=" << (rep.valid ? 1 : 0) << "\n"
                  << "frames=" << rep.frame_count << "\n";
    }
    return 0;
}

struct AnalyzeArgs {
    std::string cover, stego;
    double alpha = 0.5;
};

int run_analyze(const AnalyzeArgs& args) {
    const PixelGrid cover = load_image(args.cover);
    const PixelGrid stego = load_image(args.stego);
    print_report(analyze(cover, stego, args.alpha));
    return 0;
}

struct BenchArgs {
    std::vector<std::string> images;
    std::size_t payload_bytes = 0;
    int k = 1;
    int seeds = 5;
    std::string out = "bench.csv";
    int nest_size = 16;
    double alpha = 0.5, pa = 0.25, lambda = 1.5;
    int pop = 15, gens = 200;
    bool time = false;
};

int run_bench_cmd(const BenchArgs& args) {
    BenchConfig config;
    for (const auto& path : args.images)
        config.images.push_back(
            BenchImage{std::filesystem::path(path).stem().string(), load_image(path)});
    config.payload_bytes = args.payload_bytes;
    config.k = args.k;
    config.seed_count = args.seeds;
    config.nest_size = args.nest_size;
    config.params.population = args.pop;
    config.params.p_a = args.pa;
    config.params.lambda = args.lambda;
    config.params.max_generations = args.gens;
    config.params.alpha_weight = args.alpha;
    config.record_time = args.time;

    const auto rows = run_bench(config);
    const std::string csv = rows_to_csv(rows);
    std::ofstream out(args.out, std::ios::binary);
    if (!out) fail(ErrorKind::IoFailure, "cannot open " + args.out + " for writing");
    out << csv;

    std::printf("%-24s %20s %20s\n", "host image", "sequential lsb", "cuckoo search");
    for (const auto& s : summarize(rows))
        std::printf("%-24s %20.6f %20.6f\n", s.image.c_str(), s.mean_z_sequential,
                    s.mean_z_cuckoo);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-LSB image steganography with cuckoo-search pixel selection"};
    app.require_subcommand(1);

    EmbedArgs embed_args;
    auto* cmd_embed = app.add_subcommand("embed", "hide a payload in a cover image");
    cmd_embed->add_option("--cover", embed_args.cover, "cover image (pgm/png)")->required();
    cmd_embed->add_option("--payload", embed_args.payload, "payload file")->required();
    cmd_embed->add_option("--out", embed_args.out, "stego image to write")->required();
    cmd_embed->add_option("--key", embed_args.key, "stego-key file to write")->required();
    cmd_embed->add_flag("--mp3", embed_args.mp3, "parse payload as MP3 first");
    cmd_embed->add_option("--k", embed_args.k, "bits per pixel")->check(CLI::Range(1, 8));
    cmd_embed->add_option("--mode", embed_args.mode, "embedding mode")
        ->check(CLI::IsMember({"cuckoo", "sequential"}));
    cmd_embed->add_option("--nest-size", embed_args.nest_size, "nest side length")
        ->check(CLI::Range(2, 4096));
    cmd_embed->add_option("--alpha", embed_args.alpha, "Z weight")
        ->check(CLI::Range(0.0, 1.0));
    cmd_embed->add_option("--pa", embed_args.pa, "discovery probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd_embed->add_option("--lambda", embed_args.lambda, "Levy exponent")
        ->check(CLI::Range(1.0001, 3.0));
    cmd_embed->add_option("--pop", embed_args.pop, "eggs per nest")->check(CLI::Range(2, 1024));
    cmd_embed->add_option("--gens", embed_args.gens, "max generations")
        ->check(CLI::Range(0, 1000000));
    cmd_embed->add_option("--seed", embed_args.seed, "master seed");
    cmd_embed->add_option("--trace", embed_args.trace, "fitness trace CSV path");

    ExtractArgs extract_args;
    auto* cmd_extract = app.add_subcommand("extract", "recover a payload from a stego image");
    cmd_extract->add_option("--stego", extract_args.stego, "stego image")->required();
    cmd_extract->add_option("--key", extract_args.key, "stego-key file")->required();
    cmd_extract->add_option("--out", extract_args.out, "payload file to write")->required();
    cmd_extract->add_flag("--validate-mp3", extract_args.validate_mp3,
                          "re-parse the payload as MP3 and report frames");

    AnalyzeArgs analyze_args;
    auto* cmd_analyze = app.add_subcommand("analyze", "quality metrics for a cover/stego pair");
    cmd_analyze->add_option("--cover", analyze_args.cover, "cover image")->required();
    cmd_analyze->add_option("--stego", analyze_args.stego, "stego image")->required();
    cmd_analyze->add_option("--alpha", analyze_args.alpha, "Z weight")
        ->check(CLI::Range(0.0, 1.0));

    BenchArgs bench_args;
    auto* cmd_bench = app.add_subcommand("bench", "sequential vs cuckoo comparison table");
    cmd_bench->add_option("--images", bench_args.images, "cover images (default: synthetic)");
    cmd_bench->add_option("--payload-bytes", bench_args.payload_bytes,
                          "payload size (0 = quarter capacity)");
    cmd_bench->add_option("--k", bench_args.k, "bits per pixel")->check(CLI::Range(1, 8));
    cmd_bench->add_option("--seeds", bench_args.seeds, "number of master seeds")
        ->check(CLI::Range(1, 100000));
    cmd_bench->add_option("--out", bench_args.out, "CSV path")->required();
    cmd_bench->add_option("--nest-size", bench_args.nest_size, "nest side length")
        ->check(CLI::Range(2, 4096));
    cmd_bench->add_option("--alpha", bench_args.alpha, "Z weight")->check(CLI::Range(0.0, 1.0));
    cmd_bench->add_option("--pa", bench_args.pa, "discovery probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd_bench->add_option("--lambda", bench_args.lambda, "Levy exponent")
        ->check(CLI::Range(1.0001, 3.0));
    cmd_bench->add_option("--pop", bench_args.pop, "eggs per nest")->check(CLI::Range(2, 1024));
    cmd_bench->add_option("--gens", bench_args.gens, "max generations")
        ->check(CLI::Range(0, 1000000));
    cmd_bench->add_flag("--time", bench_args.time,
                        "record measured wall times (CSV no longer reproduces byte-identically)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitFlags;
    }

    try {
        if (cmd_embed->parsed()) return run_embed(embed_args);
        if (cmd_extract->parsed()) return run_extract(extract_args);
        if (cmd_analyze->parsed()) return run_analyze(analyze_args);
        if (cmd_bench->parsed()) return run_bench_cmd(bench_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
