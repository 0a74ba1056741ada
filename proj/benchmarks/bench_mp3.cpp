#include <benchmark/benchmark.h>

#include "stegocs/mp3.hpp"

namespace {

using namespace stegocs;

void BM_ParseMp3_100Frames(benchmark::State& state) {
    const auto bytes = mp3::synthetic_mp3(100, true, true);
    for (auto _ : state) {
        auto copy = bytes;
        benchmark::DoNotOptimize(mp3::parse_mp3(std::move(copy)));
    }
}
BENCHMARK(BM_ParseMp3_100Frames);

void BM_ParseFrameHeader(benchmark::State& state) {
    const uint8_t header[4] = {0xFF, 0xFB, 0x90, 0x00};
    for (auto _ : state) benchmark::DoNotOptimize(mp3::parse_frame_header(header));
}
BENCHMARK(BM_ParseFrameHeader);

} // namespace
