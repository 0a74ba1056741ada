#include <benchmark/benchmark.h>

#include "stegocs/bench.hpp"
#include "stegocs/metrics.hpp"

namespace {

using namespace stegocs;

const PixelGrid& cover512() {
    static const PixelGrid grid = synthetic_texture_cover();
    return grid;
}

const PixelGrid& stego512() {
    static const PixelGrid grid = [] {
        PixelGrid g = synthetic_texture_cover();
        for (auto& s : g.samples()) s ^= 1; // flip every LSB
        return g;
    }();
    return grid;
}

void BM_Mse512(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mse(cover512(), stego512()));
}
BENCHMARK(BM_Mse512);

void BM_Psnr512(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(psnr(cover512(), stego512()));
}
BENCHMARK(BM_Psnr512);

void BM_SsimGlobal512(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ssim_global(cover512(), stego512()));
}
BENCHMARK(BM_SsimGlobal512);

void BM_FitnessZNest16(benchmark::State& state) {
    const PixelGrid a = extract_nest(cover512(), NestIndex{0, 0, 16});
    const PixelGrid b = extract_nest(stego512(), NestIndex{0, 0, 16});
    for (auto _ : state) benchmark::DoNotOptimize(fitness_z(a, b));
}
BENCHMARK(BM_FitnessZNest16);

} // namespace
