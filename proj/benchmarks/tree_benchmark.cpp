#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "psum/naive_array.hpp"
#include "psum/sampler.hpp"
#include "psum/sum_tree.hpp"

namespace {

using psum::Int64Group;
using psum::NaiveArray;
using psum::PartialSumTree;
using psum::uniform_below;

std::vector<std::int64_t> make_weights(std::int64_t n) {
    std::mt19937_64 rng(42);
    std::vector<std::int64_t> w(static_cast<std::size_t>(n));
    for (auto& v : w)
        v = static_cast<std::int64_t>(uniform_below(rng, 100)) + 1;
    return w;
}

void BM_TreeBuild(benchmark::State& state) {
    const auto weights = make_weights(state.range(0));
    for (auto _ : state) {
        PartialSumTree<Int64Group> tree{std::span<const std::int64_t>(weights)};
        benchmark::DoNotOptimize(tree);
    }
    state.SetComplexityN(state.range(0));
}

void BM_TreeSuffixSum(benchmark::State& state) {
    const auto weights = make_weights(state.range(0));
    PartialSumTree<Int64Group> tree{std::span<const std::int64_t>(weights)};
    std::mt19937_64 rng(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            tree.suffix_sum(static_cast<std::int64_t>(uniform_below(rng, tree.size() + 1))));
    state.SetComplexityN(state.range(0));
}

void BM_NaiveSuffixSum(benchmark::State& state) {
    const auto weights = make_weights(state.range(0));
    NaiveArray<Int64Group> naive{std::span<const std::int64_t>(weights)};
    std::mt19937_64 rng(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            naive.suffix_sum(static_cast<std::int64_t>(uniform_below(rng, naive.size() + 1))));
    state.SetComplexityN(state.range(0));
}

void BM_TreeInc(benchmark::State& state) {
    const auto weights = make_weights(state.range(0));
    PartialSumTree<Int64Group> tree{std::span<const std::int64_t>(weights)};
    std::mt19937_64 rng(7);
    for (auto _ : state)
        tree.inc(static_cast<std::int64_t>(uniform_below(rng, tree.size())), 1);
    state.SetComplexityN(state.range(0));
}

void BM_TreeFind(benchmark::State& state) {
    const auto weights = make_weights(state.range(0));
    PartialSumTree<Int64Group> tree{std::span<const std::int64_t>(weights)};
    const auto total = static_cast<std::uint64_t>(tree.suffix_sum(0));
    std::mt19937_64 rng(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            tree.find(static_cast<std::int64_t>(uniform_below(rng, total))));
    state.SetComplexityN(state.range(0));
}

void BM_NaiveFind(benchmark::State& state) {
    const auto weights = make_weights(state.range(0));
    NaiveArray<Int64Group> naive{std::span<const std::int64_t>(weights)};
    const auto total = static_cast<std::uint64_t>(naive.suffix_sum(0));
    std::mt19937_64 rng(7);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            naive.find(static_cast<std::int64_t>(uniform_below(rng, total))));
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_TreeBuild)->RangeMultiplier(8)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_TreeSuffixSum)->RangeMultiplier(8)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oLogN);
BENCHMARK(BM_NaiveSuffixSum)->RangeMultiplier(8)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_TreeInc)->RangeMultiplier(8)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oLogN);
BENCHMARK(BM_TreeFind)->RangeMultiplier(8)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oLogN);
BENCHMARK(BM_NaiveFind)->RangeMultiplier(8)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
