#include "psum/bench.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include "psum/naive_array.hpp"
#include "psum/sampler.hpp"
#include "psum/sum_tree.hpp"

namespace psum {
namespace {

enum OpKind { kSumN = 0, kGet = 1, kInc = 2, kFind = 3, kOpCount = 4 };
constexpr const char* kOpNames[kOpCount] = {"sumN", "get", "inc", "find"};

struct OpStats {
    std::int64_t ops = 0;
    std::int64_t total_iterations = 0;
    std::int64_t max_iterations = 0;
    double tree_ns = 0.0;
    double naive_ns = 0.0;

    void record(std::int64_t iterations) {
        ++ops;
        total_iterations += iterations;
        max_iterations = std::max(max_iterations, iterations);
    }
};

void keep(std::int64_t v) { asm volatile("" : : "r"(v)); }

OpKind pick_op(std::mt19937_64& rng, const std::array<double, kOpCount>& cumulative) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    for (int op = 0; op < kOpCount; ++op)
        if (u < cumulative[static_cast<std::size_t>(op)])
            return static_cast<OpKind>(op);
    return kFind;
}

std::vector<std::int64_t> random_weights(std::mt19937_64& rng, std::int64_t m) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(m));
    for (auto& v : w)
        v = static_cast<std::int64_t>(uniform_below(rng, 51));
    if (std::all_of(w.begin(), w.end(), [](std::int64_t v) { return v == 0; }))
        w[0] = 1;  // keep find's domain nonempty
    return w;
}

template <typename F>
double time_per_call(std::int64_t calls, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    for (std::int64_t i = 0; i < calls; ++i)
        body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::nano>(stop - start).count() /
           static_cast<double>(calls);
}

}  // namespace

BenchReport run_bench(const BenchOptions& options) {
    for (std::int64_t n : options.sizes)
        if (n < 2 || !std::has_single_bit(static_cast<std::uint64_t>(n)))
            throw std::invalid_argument("run_bench: sizes must be powers of two >= 2");
    if (options.ops_per_size < 0)
        throw std::invalid_argument("run_bench: ops_per_size must be >= 0");
    const std::array<double, kOpCount> shares = {options.inc_share, options.sum_share,
                                                 options.get_share, options.find_share};
    double share_total = 0.0;
    for (double s : shares) {
        if (s < 0.0)
            throw std::invalid_argument("run_bench: mix shares must be >= 0");
        share_total += s;
    }
    if (share_total <= 0.0)
        throw std::invalid_argument("run_bench: mix shares must not all be zero");

    // cumulative thresholds in fixed op order
    const std::array<double, kOpCount> probs = {
        options.sum_share / share_total, options.get_share / share_total,
        options.inc_share / share_total, options.find_share / share_total};
    std::array<double, kOpCount> cumulative{};
    double running = 0.0;
    for (int op = 0; op < kOpCount; ++op) {
        running += probs[static_cast<std::size_t>(op)];
        cumulative[static_cast<std::size_t>(op)] = running;
    }

    BenchReport report;
    report.seed = options.seed;
    report.rng = "mt19937_64";
    {
        char buf[128];
        std::snprintf(buf, sizeof buf, "inc:%.3g,sum:%.3g,get:%.3g,find:%.3g",
                      probs[kInc] , probs[kSumN], probs[kGet], probs[kFind]);
        report.mix = buf;
    }

    for (std::int64_t n : options.sizes) {
        std::mt19937_64 rng(options.seed ^ static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL);
        const std::int64_t m = n;
        const std::vector<std::int64_t> weights = random_weights(rng, m);
        PartialSumTree<Int64Group> tree{std::span<const std::int64_t>(weights)};
        NaiveArray<Int64Group> naive{std::span<const std::int64_t>(weights)};
        std::int64_t total = naive.suffix_sum(0);

        std::array<OpStats, kOpCount> stats{};

        // counting + differential pass, traced operations
        for (std::int64_t step = 0; step < options.ops_per_size; ++step) {
            switch (pick_op(rng, cumulative)) {
                case kSumN: {
                    const auto k = static_cast<std::int64_t>(uniform_below(rng, m + 1));
                    const auto traced = tree.traced_suffix_sum(k);
                    if (traced.result != naive.suffix_sum(k))
                        ++report.mismatches;
                    stats[kSumN].record(static_cast<std::int64_t>(traced.trace.indices.size()));
                    break;
                }
                case kGet: {
                    const auto k = static_cast<std::int64_t>(uniform_below(rng, m));
                    const auto traced = tree.traced_get(k);
                    if (traced.result != naive.get(k))
                        ++report.mismatches;
                    stats[kGet].record(static_cast<std::int64_t>(traced.trace.indices.size()));
                    break;
                }
                case kInc: {
                    const auto k = static_cast<std::int64_t>(uniform_below(rng, m));
                    const auto d = static_cast<std::int64_t>(uniform_below(rng, 5));
                    const auto trace = tree.traced_inc(k, d);
                    naive.inc(k, d);
                    total += d;
                    stats[kInc].record(static_cast<std::int64_t>(trace.indices.size()));
                    break;
                }
                case kFind: {
                    const auto x = static_cast<std::int64_t>(
                        uniform_below(rng, static_cast<std::uint64_t>(total)));
                    const auto traced = tree.traced_find(x);
                    if (traced.result != naive.find(x))
                        ++report.mismatches;
                    stats[kFind].record(static_cast<std::int64_t>(traced.trace.indices.size()) - 1);
                    break;
                }
                default:
                    break;
            }
        }

        // timing pass, plain operations; informational, reads first so the
        // find arguments stay inside the current total
        std::mt19937_64 timing_rng(options.seed + 1);
        std::int64_t sink = 0;
        if (stats[kSumN].ops > 0)
            stats[kSumN].tree_ns = time_per_call(stats[kSumN].ops, [&] {
                sink ^= tree.suffix_sum(static_cast<std::int64_t>(uniform_below(timing_rng, m + 1)));
            });
        if (stats[kGet].ops > 0)
            stats[kGet].tree_ns = time_per_call(stats[kGet].ops, [&] {
                sink ^= tree.get(static_cast<std::int64_t>(uniform_below(timing_rng, m)));
            });
        if (stats[kFind].ops > 0)
            stats[kFind].tree_ns = time_per_call(stats[kFind].ops, [&] {
                sink ^= tree.find(static_cast<std::int64_t>(
                    uniform_below(timing_rng, static_cast<std::uint64_t>(total))));
            });
        if (stats[kInc].ops > 0)
            stats[kInc].tree_ns = time_per_call(stats[kInc].ops, [&] {
                tree.inc(static_cast<std::int64_t>(uniform_below(timing_rng, m)), 0);
            });

        timing_rng.seed(options.seed + 1);
        if (stats[kSumN].ops > 0)
            stats[kSumN].naive_ns = time_per_call(stats[kSumN].ops, [&] {
                sink ^= naive.suffix_sum(static_cast<std::int64_t>(uniform_below(timing_rng, m + 1)));
            });
        if (stats[kGet].ops > 0)
            stats[kGet].naive_ns = time_per_call(stats[kGet].ops, [&] {
                sink ^= naive.get(static_cast<std::int64_t>(uniform_below(timing_rng, m)));
            });
        if (stats[kFind].ops > 0)
            stats[kFind].naive_ns = time_per_call(stats[kFind].ops, [&] {
                sink ^= naive.find(static_cast<std::int64_t>(
                    uniform_below(timing_rng, static_cast<std::uint64_t>(total))));
            });
        if (stats[kInc].ops > 0)
            stats[kInc].naive_ns = time_per_call(stats[kInc].ops, [&] {
                naive.inc(static_cast<std::int64_t>(uniform_below(timing_rng, m)), 0);
            });
        keep(sink);

        for (int op = 0; op < kOpCount; ++op) {
            const OpStats& s = stats[static_cast<std::size_t>(op)];
            BenchRow row;
            row.op = kOpNames[op];
            row.n = n;
            row.ops = s.ops;
            row.max_iterations = s.max_iterations;
            row.mean_iterations =
                s.ops > 0 ? static_cast<double>(s.total_iterations) / static_cast<double>(s.ops)
                          : 0.0;
            row.tree_ns_per_op = s.tree_ns;
            row.naive_ns_per_op = s.naive_ns;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

void BenchReport::write(std::ostream& out) const {
    char buf[320];
    for (const BenchRow& row : rows) {
        std::snprintf(buf, sizeof buf,
                      "op=%s N=%lld ops=%lld max_iters=%lld mean_iters=%.3f tree_ns=%.1f "
                      "naive_ns=%.1f mix=%s seed=%llu rng=%s mismatches=%lld\n",
                      row.op.c_str(), static_cast<long long>(row.n),
                      static_cast<long long>(row.ops), static_cast<long long>(row.max_iterations),
                      row.mean_iterations, row.tree_ns_per_op, row.naive_ns_per_op, mix.c_str(),
                      static_cast<unsigned long long>(seed), rng.c_str(),
                      static_cast<long long>(mismatches));
        out << buf;
    }
}

}  // namespace psum
