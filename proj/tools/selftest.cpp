#include "selftest.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "psum/naive_array.hpp"
#include "psum/sampler.hpp"
#include "psum/sum_tree.hpp"

namespace psum::cli {
namespace {

std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool all_nonnegative(std::span<const std::int64_t> values) {
    return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v >= 0; });
}

}  // namespace

bool run_selftest(std::int64_t max_m, std::int64_t cases, std::uint64_t seed, std::ostream& out) {
    constexpr std::int64_t kOpsPerCase = 100;
    std::mt19937_64 rng(seed);
    std::int64_t checks = 0;

    for (std::int64_t m = 1; m <= max_m; ++m) {
        for (std::int64_t c = 0; c < cases; ++c) {
            // even cases stay nonnegative so find is exercised
            const std::int64_t lo = (c % 2 == 0) ? 0 : -50;
            std::vector<std::int64_t> initial(static_cast<std::size_t>(m));
            for (auto& v : initial)
                v = rand_in(rng, lo, 50);
            PartialSumTree<Int64Group> tree{std::span<const std::int64_t>(initial)};
            NaiveArray<Int64Group> naive{std::span<const std::int64_t>(initial)};

            auto fail = [&](const char* what, std::int64_t arg0, std::int64_t arg1) {
                out << "selftest: MISMATCH op=" << what << " M=" << m << " case=" << c
                    << " args=(" << arg0 << "," << arg1 << ") seed=" << seed << '\n';
                return false;
            };

            for (std::int64_t step = 0; step < kOpsPerCase; ++step) {
                switch (uniform_below(rng, 6)) {
                    case 0: {  // inc
                        const std::int64_t k = rand_in(rng, 0, naive.size() - 1);
                        const std::int64_t d = rand_in(rng, lo, 50);
                        tree.inc(k, d);
                        naive.inc(k, d);
                        break;
                    }
                    case 1: {  // set
                        const std::int64_t k = rand_in(rng, 0, naive.size() - 1);
                        const std::int64_t v = rand_in(rng, lo, 50);
                        tree.set(k, v);
                        naive.set(k, v);
                        break;
                    }
                    case 2: {  // append
                        const std::int64_t v = rand_in(rng, lo, 50);
                        tree.append(v);
                        naive.append(v);
                        break;
                    }
                    case 3: {  // get
                        const std::int64_t k = rand_in(rng, 0, naive.size() - 1);
                        ++checks;
                        if (tree.get(k) != naive.get(k))
                            return fail("get", k, 0);
                        break;
                    }
                    case 4: {  // suffix sum
                        const std::int64_t k = rand_in(rng, 0, naive.size());
                        ++checks;
                        if (tree.suffix_sum(k) != naive.suffix_sum(k))
                            return fail("suffix", k, 0);
                        break;
                    }
                    default: {  // range sum
                        const std::int64_t j = rand_in(rng, 0, naive.size());
                        const std::int64_t k = rand_in(rng, j - 1, naive.size() - 1);
                        ++checks;
                        if (tree.range_sum(j, k) != naive.range_sum(j, k))
                            return fail("sum", j, k);
                        break;
                    }
                }
                if (all_nonnegative(naive.values()) && naive.suffix_sum(0) > 0) {
                    const std::int64_t x = static_cast<std::int64_t>(
                        uniform_below(rng, static_cast<std::uint64_t>(naive.suffix_sum(0))));
                    ++checks;
                    if (tree.find(x) != naive.find(x))
                        return fail("find", x, 0);
                }
            }
            for (std::int64_t k = 0; k < naive.size(); ++k) {
                ++checks;
                if (tree.get(k) != naive.get(k))
                    return fail("final get", k, 0);
            }
        }
    }
    out << "selftest: pass (M=1.." << max_m << ", cases=" << cases << " per M, seed=" << seed
        << ", " << checks << " comparisons)\n";
    return true;
}

}  // namespace psum::cli
