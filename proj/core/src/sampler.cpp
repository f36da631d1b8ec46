#include "psum/sampler.hpp"

#include <stdexcept>
#include <string>

namespace psum {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("uniform_below: bound must be positive");
    // accept draws in [min, 2^64), a span that bound divides evenly
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t v = rng();
    while (v < min)
        v = rng();
    return v % bound;
}

WeightedSampler::WeightedSampler(std::span<const std::int64_t> weights, std::uint64_t seed)
    : rng_(seed) {
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] < 0)
            throw std::invalid_argument("WeightedSampler: weight " + std::to_string(i) +
                                        " is negative");
    tree_ = PartialSumTree<Int64Group>(weights);
}

WeightedSampler::index_type WeightedSampler::draw() {
    const std::int64_t total = this->total();
    if (total <= 0)
        throw std::domain_error("draw: total weight is zero");
    const std::uint64_t r = uniform_below(rng_, static_cast<std::uint64_t>(total));
    return tree_.find(static_cast<std::int64_t>(r));
}

void WeightedSampler::update_weight(index_type k, std::int64_t w) {
    if (w < 0)
        throw std::invalid_argument("update_weight: weight must be >= 0");
    tree_.set(k, w);
}

void WeightedSampler::increment_weight(index_type k, std::int64_t d) {
    const std::int64_t next = Int64Group{}.combine(tree_.get(k), d);
    if (next < 0)
        throw std::invalid_argument("increment_weight: resulting weight is negative");
    tree_.inc(k, d);
}

std::vector<std::uint64_t> WeightedSampler::histogram(std::int64_t draws) {
    if (draws < 0)
        throw std::invalid_argument("histogram: draw count must be >= 0");
    if (total() <= 0)
        throw std::domain_error("histogram: total weight is zero");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(size()), 0);
    for (std::int64_t i = 0; i < draws; ++i)
        ++counts[static_cast<std::size_t>(draw())];
    return counts;
}

}  // namespace psum
