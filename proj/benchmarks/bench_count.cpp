#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "pinnacle/blocks.hpp"
#include "pinnacle/forest.hpp"
#include "pinnacle/orderings.hpp"
#include "pinnacle/walks.hpp"

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

std::int64_t pow10(int e) {
    std::int64_t v = 1;
    while (e-- > 0) v *= 10;
    return v;
}

// k members spread evenly through [1, n]; admissible whenever n >= 3k.
pinnacle::PinnacleCandidate spread_set(int k, std::int64_t n) {
    const std::int64_t gap = n / k;
    std::vector<std::int64_t> members(k);
    for (int t = 0; t < k; ++t) members[t] = gap * (t + 1);
    return {std::move(members), n};
}

// The smallest compact admissible set of size k inside [1, 2k+1].
pinnacle::PinnacleCandidate odd_set(int k) {
    std::vector<std::int64_t> members(k);
    for (int t = 0; t < k; ++t) members[t] = 2 * t + 3;
    return {std::move(members), 2 * k + 1};
}

void BM_FastCountModular(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const std::int64_t n = pow10(static_cast<int>(state.range(1)));
    const auto cand = spread_set(k, n);
    const auto mode = pinnacle::ArithMode::modular(kPrime);
    for (auto _ : state) {
        pinnacle::op_counter::reset();
        benchmark::DoNotOptimize(pinnacle::fast_count(cand, mode));
    }
    state.counters["ops"] = static_cast<double>(pinnacle::op_counter::total());
}
BENCHMARK(BM_FastCountModular)->ArgsProduct({{5, 10, 20, 40, 50}, {3, 6, 9}});

void BM_FastCountExact(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const std::int64_t n = state.range(1);
    const auto cand = spread_set(k, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinnacle::fast_count(cand));
    }
}
BENCHMARK(BM_FastCountExact)->Args({5, 100})->Args({10, 500})->Args({20, 1000});

void BM_WeightedWalkSum(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto cand = spread_set(k, 4 * k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinnacle::weighted_walk_sum(cand));
    }
}
BENCHMARK(BM_WeightedWalkSum)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_CountOrderings(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto cand = odd_set(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            pinnacle::count_orderings(pinnacle::OrderingState(cand, 0)));
    }
}
BENCHMARK(BM_CountOrderings)->Arg(5)->Arg(15)->Arg(30);

void BM_ForestEncode(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto cand = odd_set(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinnacle::forest_encode(cand));
    }
}
BENCHMARK(BM_ForestEncode)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
