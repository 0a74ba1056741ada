#include "stegocs/cuckoo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace stegocs {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_params(const CsParams& p) {
    if (p.population < 2) fail(ErrorKind::BadArgument, "population must be >= 2");
    if (p.p_a < 0.0 || p.p_a > 1.0) fail(ErrorKind::BadArgument, "p_a must be in [0,1]");
    if (p.alpha_step <= 0.0) fail(ErrorKind::BadArgument, "alpha_step must be > 0");
    if (!(p.lambda > 1.0 && p.lambda <= 3.0))
        fail(ErrorKind::BadArgument, "lambda must be in (1,3]");
    if (p.alpha_weight < 0.0 || p.alpha_weight > 1.0)
        fail(ErrorKind::BadArgument, "alpha_weight must be in [0,1]");
}

uint64_t fresh_base_seed(SplitMix64& rng) {
    // low 16 bits cleared: a pure Fisher-Yates base, no patch
    return rng.next() & PixelOrder::kBaseMask;
}

} // namespace

double levy_step(double lambda, SplitMix64& rng) {
    if (!(lambda > 1.0 && lambda <= 3.0))
        fail(ErrorKind::BadArgument, "lambda = " + std::to_string(lambda) + ", need (1,3]");
    const double l = std::min(lambda, 1.99); // Mantegna validity
    const double sigma =
        std::pow(std::tgamma(1.0 + l) * std::sin(kPi * l / 2.0) /
                     (std::tgamma((1.0 + l) / 2.0) * l * std::pow(2.0, (l - 1.0) / 2.0)),
                 1.0 / l);
    const double u = rng.gaussian() * sigma;
    double v = rng.gaussian();
    while (v == 0.0) v = rng.gaussian();
    return u / std::pow(std::abs(v), 1.0 / l);
}

PixelOrder perturb_order(const PixelOrder& order, double step, double alpha_step,
                         SplitMix64& rng) {
    const std::size_t n = order.size();
    const double scaled = std::abs(step) * alpha_step;
    std::size_t m;
    if (!std::isfinite(scaled)) {
        m = 255;
    } else {
        m = static_cast<std::size_t>(std::ceil(scaled));
    }
    m = std::clamp<std::size_t>(m, 1, std::min<std::size_t>(std::max<std::size_t>(n / 2, 1), 255));
    const unsigned nonce = static_cast<unsigned>(rng.next() & 0xFF);
    return PixelOrder::from_seed(
        PixelOrder::patch_seed(order.seed(), static_cast<unsigned>(m), nonce), n);
}

int abandon_count(double p_a, int population) {
    const int a = static_cast<int>(std::ceil(p_a * population));
    return std::clamp(a, 0, population);
}

NestOptimization optimize_nest(const PixelGrid& block, const BitChunk& chunk, int k,
                               const CsParams& params, uint32_t nest_index) {
    check_params(params);
    const std::size_t n = block.size();
    SplitMix64 rng(derive_seed(params.master_seed, nest_index));

    PixelGrid scratch = block;
    auto evaluate = [&](const PixelOrder& order) {
        embed_chunk_into(scratch, block, chunk, order, k);
        return fitness_z(scratch, block, params.alpha_weight);
    };

    // warm start: egg 0 is the identity ordering (the sequential baseline),
    // the rest are fresh random orders
    std::vector<Egg> eggs;
    eggs.reserve(params.population);
    eggs.push_back(Egg{PixelOrder::identity(n), 0.0});
    for (int i = 1; i < params.population; ++i)
        eggs.push_back(Egg{PixelOrder::from_seed(fresh_base_seed(rng), n), 0.0});
    for (auto& egg : eggs) egg.fitness = evaluate(egg.order);

    NestOptimization out;
    out.abandoned_per_generation = abandon_count(params.p_a, params.population);
    out.best = *std::max_element(eggs.begin(), eggs.end(),
                                 [](const Egg& a, const Egg& b) { return a.fitness < b.fitness; });
    out.trace.push_back(out.best.fitness);

    auto consider_best = [&] {
        for (const auto& egg : eggs)
            if (egg.fitness > out.best.fitness) out.best = egg;
    };

    std::vector<int> order_by_fitness(eggs.size());
    int stagnant = 0;
    for (int gen = 1; gen <= params.max_generations; ++gen) {
        const double previous_best = out.best.fitness;

        for (auto& egg : eggs) {
            const double step = levy_step(params.lambda, rng);
            PixelOrder candidate = perturb_order(egg.order, step, params.alpha_step, rng);
            const double f = evaluate(candidate);
            if (f > egg.fitness) egg = Egg{std::move(candidate), f};
        }
        consider_best(); // before abandonment: with p_a = 1 every egg is replaced

        // abandon the worst eggs; ties resolve by egg index for determinism
        std::iota(order_by_fitness.begin(), order_by_fitness.end(), 0);
        std::stable_sort(order_by_fitness.begin(), order_by_fitness.end(),
                         [&](int a, int b) { return eggs[a].fitness < eggs[b].fitness; });
        for (int i = 0; i < out.abandoned_per_generation; ++i) {
            Egg& egg = eggs[order_by_fitness[i]];
            egg.order = PixelOrder::from_seed(fresh_base_seed(rng), n);
            egg.fitness = evaluate(egg.order);
        }
        consider_best();
        out.trace.push_back(out.best.fitness);

        if (out.best.fitness - previous_best < params.epsilon) {
            if (++stagnant >= params.patience) break;
        } else {
            stagnant = 0;
        }
    }
    return out;
}

ImagePlan optimize_image(const std::vector<std::pair<NestIndex, PixelGrid>>& nest_blocks,
                         const std::vector<BitChunk>& chunks, int k, const CsParams& params) {
    check_params(params);
    const std::size_t nest_count = nest_blocks.size();
    const std::size_t chunk_count = chunks.size();
    if (chunk_count > nest_count)
        fail(ErrorKind::CapacityExceeded, std::to_string(chunk_count) + " chunks for " +
                                              std::to_string(nest_count) + " nests");

    ImagePlan plan;
    if (chunk_count == 0) return plan;

    plan.nests.reserve(nest_count);
    for (std::size_t j = 0; j < nest_count; ++j) {
        const BitChunk& provisional = chunks[j % chunk_count];
        plan.nests.push_back(optimize_nest(nest_blocks[j].second, provisional, k, params,
                                           static_cast<uint32_t>(j)));
    }

    plan.plans.resize(chunk_count);
    if (chunk_count == nest_count) {
        for (std::size_t c = 0; c < chunk_count; ++c)
            plan.plans[c] = ChunkPlan{static_cast<uint32_t>(c),
                                      plan.nests[c].best.order.seed()};
        return plan;
    }

    // each chunk picks the fittest nest among those optimized for it;
    // the ascending scan makes ties resolve to the lower raster index
    for (std::size_t c = 0; c < chunk_count; ++c) {
        std::size_t chosen = c;
        for (std::size_t j = c + chunk_count; j < nest_count; j += chunk_count)
            if (plan.nests[j].best.fitness > plan.nests[chosen].best.fitness) chosen = j;
        plan.plans[c] = ChunkPlan{static_cast<uint32_t>(chosen),
                                  plan.nests[chosen].best.order.seed()};
    }
    return plan;
}

} // namespace stegocs
