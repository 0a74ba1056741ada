#include <benchmark/benchmark.h>

#include "stegocs/bench.hpp"
#include "stegocs/cuckoo.hpp"
#include "stegocs/rng.hpp"

namespace {

using namespace stegocs;

std::vector<uint8_t> random_payload(std::size_t bytes) {
    SplitMix64 rng(99);
    std::vector<uint8_t> out(bytes);
    for (auto& b : out) b = static_cast<uint8_t>(rng.next() & 0xFF);
    return out;
}

void BM_EmbedSequential512FullK1(benchmark::State& state) {
    const PixelGrid cover = synthetic_texture_cover();
    const auto payload = random_payload(32768);
    for (auto _ : state)
        benchmark::DoNotOptimize(embed(cover, payload, 1, CsParams{}, EmbedMode::Sequential));
}
BENCHMARK(BM_EmbedSequential512FullK1);

void BM_OptimizeNest16(benchmark::State& state) {
    const PixelGrid block = extract_nest(synthetic_texture_cover(), NestIndex{1, 1, 16});
    const auto payload = random_payload(32);
    const auto chunks = chunk_payload(payload, 1, 16);
    CsParams params;
    params.population = 15;
    params.max_generations = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_nest(block, chunks[0], 1, params));
}
BENCHMARK(BM_OptimizeNest16)->Arg(20)->Arg(200);

} // namespace

BENCHMARK_MAIN();
