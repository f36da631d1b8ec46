#pragma once

// Shared test fixtures and independent oracles. Everything here computes
// expectations by direct definition (trial division, linear summation) so
// the structures under test are never on both sides of an assertion.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "psum/naive_array.hpp"
#include "psum/sampler.hpp"
#include "psum/sum_tree.hpp"

namespace psum::test {

// 16-element worked example used across the suites; kRef16Cells is the
// storage layout it must build to, verified independently below.
inline constexpr std::array<std::int64_t, 16> kRef16Values = {14, 8, 6, 3, 8, 1, 5, 3,
                                                              20, 7, 3, 4, 6, 2, 4, 5};
inline constexpr std::array<std::int64_t, 16> kRef16Cells = {99, 8, 9, 3, 17, 1, 8, 3,
                                                             51, 7, 7, 4, 17, 2, 9, 5};

// Window width by trial division, not bit tricks.
inline std::int64_t slow_window_width(std::int64_t k, std::int64_t capacity) {
    if (k == 0)
        return capacity;
    std::int64_t width = 1;
    while (k % (width * 2) == 0)
        width *= 2;
    return width;
}

// Cell contents recomputed from the definition: cell k folds the values in
// [k, k + width) clipped at M.
template <GroupContext G>
std::vector<typename G::value_type> slow_cells(std::span<const typename G::value_type> values,
                                               std::int64_t capacity, const G& ctx = G{}) {
    const auto m = static_cast<std::int64_t>(values.size());
    std::vector<typename G::value_type> cells;
    cells.reserve(values.size());
    for (std::int64_t k = 0; k < m; ++k) {
        const std::int64_t hi = std::min(k + slow_window_width(k, capacity), m);
        auto acc = ctx.identity();
        for (std::int64_t i = k; i < hi; ++i)
            acc = ctx.combine(acc, values[static_cast<std::size_t>(i)]);
        cells.push_back(acc);
    }
    return cells;
}

inline std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline std::vector<std::int64_t> random_values(std::mt19937_64& rng, std::int64_t m,
                                               std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(m));
    for (auto& v : out)
        v = rand_in(rng, lo, hi);
    return out;
}

struct DifferentialConfig {
    std::int64_t max_m = 64;
    std::int64_t cases_per_m = 200;
    std::int64_t ops_per_case = 100;
    std::int64_t magnitude = 50;  // elements and deltas drawn from [-magnitude, magnitude]
    std::uint64_t seed = 20260809;
};

// Random operation sequences applied to tree and naive array in lockstep;
// every query is compared exactly. Even-numbered cases stay nonnegative so
// find is exercised there; odd cases mix signs and skip find unless the
// configuration happens to be nonnegative. Returns an empty string on
// success, otherwise a description of the first mismatch.
inline std::string run_differential(const DifferentialConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    for (std::int64_t m = 1; m <= cfg.max_m; ++m) {
        for (std::int64_t c = 0; c < cfg.cases_per_m; ++c) {
            const std::int64_t lo = (c % 2 == 0) ? 0 : -cfg.magnitude;
            const auto initial = random_values(rng, m, lo, cfg.magnitude);
            PartialSumTree<Int64Group> tree{std::span<const std::int64_t>(initial)};
            NaiveArray<Int64Group> naive{std::span<const std::int64_t>(initial)};

            auto where = [&](const char* op) {
                return std::string(op) + " mismatch at M=" + std::to_string(m) +
                       " case=" + std::to_string(c) + " seed=" + std::to_string(cfg.seed);
            };

            for (std::int64_t step = 0; step < cfg.ops_per_case; ++step) {
                switch (uniform_below(rng, 6)) {
                    case 0: {
                        const auto k = rand_in(rng, 0, naive.size() - 1);
                        const auto d = rand_in(rng, lo, cfg.magnitude);
                        tree.inc(k, d);
                        naive.inc(k, d);
                        break;
                    }
                    case 1: {
                        const auto k = rand_in(rng, 0, naive.size() - 1);
                        const auto v = rand_in(rng, lo, cfg.magnitude);
                        tree.set(k, v);
                        naive.set(k, v);
                        break;
                    }
                    case 2: {
                        const auto v = rand_in(rng, lo, cfg.magnitude);
                        tree.append(v);
                        naive.append(v);
                        break;
                    }
                    case 3: {
                        const auto k = rand_in(rng, 0, naive.size() - 1);
                        if (tree.get(k) != naive.get(k))
                            return where("get");
                        break;
                    }
                    case 4: {
                        const auto k = rand_in(rng, 0, naive.size());
                        if (tree.suffix_sum(k) != naive.suffix_sum(k))
                            return where("suffix_sum");
                        break;
                    }
                    default: {
                        const auto j = rand_in(rng, 0, naive.size());
                        const auto k = rand_in(rng, j - 1, naive.size() - 1);
                        if (tree.range_sum(j, k) != naive.range_sum(j, k))
                            return where("range_sum");
                        break;
                    }
                }
                const auto vals = naive.values();
                const bool nonneg =
                    std::all_of(vals.begin(), vals.end(), [](std::int64_t v) { return v >= 0; });
                if (nonneg && naive.suffix_sum(0) > 0) {
                    const auto x = static_cast<std::int64_t>(
                        uniform_below(rng, static_cast<std::uint64_t>(naive.suffix_sum(0))));
                    if (tree.find(x) != naive.find(x))
                        return where("find");
                }
            }
            for (std::int64_t k = 0; k < naive.size(); ++k)
                if (tree.get(k) != naive.get(k))
                    return where("final get");
            for (std::int64_t k = 0; k <= naive.size(); ++k)
                if (tree.suffix_sum(k) != naive.suffix_sum(k))
                    return where("final suffix_sum");
        }
    }
    return {};
}

}  // namespace psum::test
