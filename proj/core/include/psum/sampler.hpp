#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "psum/group.hpp"
#include "psum/sum_tree.hpp"

namespace psum {

// Uniform integer in [0, bound) by rejection; plain modulo would bias low
// residues whenever bound does not divide 2^64.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Categorical sampling over mutable nonnegative integer weights: event k is
// drawn with probability weight[k] / total, exactly, up to the generator's
// uniformity. Draws and weight updates both cost O(log N) through the tree.
//
// The generator is mt19937_64 seeded from a single 64-bit value, so equal
// seeds reproduce equal draw sequences on any platform. A sampler owns its
// generator; concurrent draws need external serialization or one sampler
// per thread.
class WeightedSampler {
public:
    using index_type = std::int64_t;

    WeightedSampler(std::span<const std::int64_t> weights, std::uint64_t seed);
    WeightedSampler(std::initializer_list<std::int64_t> weights, std::uint64_t seed)
        : WeightedSampler(std::span<const std::int64_t>(weights.begin(), weights.size()), seed) {}

    index_type size() const noexcept { return tree_.size(); }
    std::int64_t total() const { return tree_.suffix_sum(0); }
    std::int64_t weight(index_type k) const { return tree_.get(k); }
    const PartialSumTree<Int64Group>& tree() const noexcept { return tree_; }

    // One draw; requires total() > 0.
    index_type draw();

    // Sets event k's weight to w (w >= 0).
    void update_weight(index_type k, std::int64_t w);

    // Adds d to event k's weight; the result must stay >= 0.
    void increment_weight(index_type k, std::int64_t d);

    // Tallies `draws` draws into per-event counts.
    std::vector<std::uint64_t> histogram(std::int64_t draws);

    static constexpr const char* rng_name() noexcept { return "mt19937_64"; }

private:
    PartialSumTree<Int64Group> tree_;
    std::mt19937_64 rng_;
};

}  // namespace psum
