#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stegocs/klsb.hpp"
#include "stegocs/metrics.hpp"

namespace stegocs {

// one candidate solution for a nest: a bit-to-pixel assignment and its Z
struct Egg {
    PixelOrder order;
    double fitness = 0.0;
};

struct CsParams {
    int population = 15;      // eggs per nest
    double p_a = 0.25;        // discovery probability: fraction abandoned per generation
    double alpha_step = 1.0;  // Levy step scale
    double lambda = 1.5;      // Levy exponent, (1, 3]
    int max_generations = 200;
    double epsilon = 1e-6;    // minimum best-fitness improvement
    int patience = 20;        // stagnant generations before stopping
    uint64_t master_seed = 0;
    double alpha_weight = 0.5; // Z = alpha*SSIM + (1-alpha)*PSNR
};

// placement of one payload chunk: nest raster index + the order seed that
// regenerates the winning pixel ordering
struct ChunkPlan {
    uint32_t nest_index = 0;
    uint64_t order_seed = 0;

    bool operator==(const ChunkPlan&) const = default;
};

struct NestOptimization {
    Egg best;                        // best egg ever seen
    std::vector<double> trace;       // best-so-far Z; [0] is the initial population
    int abandoned_per_generation = 0; // == abandon_count(p_a, population)
};

struct ImagePlan {
    std::vector<ChunkPlan> plans;        // plans[c] places chunk c
    std::vector<NestOptimization> nests; // raster order, one per optimized nest
};

// Heavy-tailed step via Mantegna's construction:
//   sigma = (gamma(1+L)*sin(pi*L/2) / (gamma((1+L)/2)*L*2^((L-1)/2)))^(1/L)
//   step  = sigma*u / |v|^(1/L),  u, v standard normal
// The construction degenerates for L >= 2 (sin term), so L is clamped to
// 1.99 inside the formula; the accepted parameter range stays (1, 3].
double levy_step(double lambda, SplitMix64& rng);

// m = clamp(ceil(|step| * alpha_step), 1, min(n/2, 255)) transpositions over
// the order's base permutation, recorded in the seed's patch field so the
// result regenerates from its seed alone (see PixelOrder).
PixelOrder perturb_order(const PixelOrder& order, double step, double alpha_step,
                         SplitMix64& rng);

int abandon_count(double p_a, int population);

// Cuckoo search over pixel orderings of one nest. Per generation every egg
// proposes a Levy-perturbed order (kept if fitter), then the worst
// abandon_count eggs are replaced by fresh random orders. Stops after
// max_generations or once the best Z improves by < epsilon for patience
// consecutive generations. The egg stream is derived from
// (master_seed, nest_index), so nests can run concurrently and still
// reproduce serial results.
NestOptimization optimize_nest(const PixelGrid& block, const BitChunk& chunk, int k,
                               const CsParams& params, uint32_t nest_index = 0);

// Optimize every nest and place the chunks. nest_blocks must be in raster
// order (position == nest index recorded in plans). With fewer chunks than
// nests, nest j is optimized against chunk (j mod C) and each chunk goes to
// the fittest nest among those optimized for it; with chunks == nests the
// assignment is the identity.
ImagePlan optimize_image(const std::vector<std::pair<NestIndex, PixelGrid>>& nest_blocks,
                         const std::vector<BitChunk>& chunks, int k, const CsParams& params);

} // namespace stegocs
