#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <sstream>

#include "psum/bench.hpp"
#include "support.hpp"

using namespace psum;

namespace {

std::int64_t log2_of(std::int64_t n) {
    return static_cast<std::int64_t>(std::countr_zero(static_cast<std::uint64_t>(n)));
}

const BenchRow& row_for(const BenchReport& report, const std::string& op, std::int64_t n) {
    for (const auto& row : report.rows)
        if (row.op == op && row.n == n)
            return row;
    REQUIRE(false);
    return report.rows.front();
}

}  // namespace

TEST_CASE("exhaustive suffix sums at N = 16 peak at five iterations") {
    std::mt19937_64 rng(3);
    const auto values = test::random_values(rng, 16, 0, 50);
    const PartialSumTree<Int64Group> t{std::span<const std::int64_t>(values)};
    std::int64_t max_len = 0;
    for (std::int64_t k = 0; k <= 16; ++k)
        max_len = std::max(max_len,
                           static_cast<std::int64_t>(t.traced_suffix_sum(k).trace.indices.size()));
    CHECK(max_len == 5);  // log2(16) + 1
}

TEST_CASE("every operation at N = 2 takes at most two iterations") {
    const PartialSumTree<Int64Group> t{{4, 9}};
    for (std::int64_t k = 0; k <= 2; ++k)
        CHECK(t.traced_suffix_sum(k).trace.indices.size() <= 2);
    for (std::int64_t k = 0; k < 2; ++k) {
        CHECK(t.traced_get(k).trace.indices.size() <= 2);
        PartialSumTree<Int64Group> copy = t;
        CHECK(copy.traced_inc(k, 1).indices.size() <= 2);
    }
    for (std::int64_t x = 0; x < 13; ++x)
        CHECK(t.traced_find(x).trace.indices.size() - 1 == 1);  // log2(2) loop steps
}

TEST_CASE("run_bench enforces its counter bounds and agrees with the oracle") {
    BenchOptions options;
    options.sizes = {2, 16, 256};
    options.ops_per_size = 400;
    options.seed = 12;
    const auto report = run_bench(options);
    CHECK(report.mismatches == 0);
    CHECK(report.rows.size() == 12);
    for (const std::int64_t n : options.sizes) {
        const auto bound = log2_of(n) + 1;
        CHECK(row_for(report, "sumN", n).max_iterations <= bound);
        CHECK(row_for(report, "get", n).max_iterations <= bound);
        CHECK(row_for(report, "inc", n).max_iterations <= bound);
        const auto& find_row = row_for(report, "find", n);
        CHECK(find_row.max_iterations == log2_of(n));
        CHECK(find_row.mean_iterations == doctest::Approx(double(log2_of(n))));
        std::int64_t ops = 0;
        for (const auto* op : {"sumN", "get", "inc", "find"})
            ops += row_for(report, op, n).ops;
        CHECK(ops == options.ops_per_size);
    }
}

TEST_CASE("large sampled size stays within the bound") {
    BenchOptions options;
    options.sizes = {std::int64_t{1} << 18};
    options.ops_per_size = 2000;
    options.seed = 5;
    const auto report = run_bench(options);
    CHECK(report.mismatches == 0);
    CHECK(row_for(report, "sumN", 1 << 18).max_iterations <= 19);
    CHECK(row_for(report, "find", 1 << 18).max_iterations == 18);
}

TEST_CASE("counters are deterministic under a fixed seed") {
    BenchOptions options;
    options.sizes = {16, 64};
    options.ops_per_size = 300;
    options.seed = 777;
    const auto a = run_bench(options);
    const auto b = run_bench(options);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].op == b.rows[i].op);
        CHECK(a.rows[i].ops == b.rows[i].ops);
        CHECK(a.rows[i].max_iterations == b.rows[i].max_iterations);
        CHECK(a.rows[i].mean_iterations == b.rows[i].mean_iterations);
    }
}

TEST_CASE("report rows are machine readable") {
    BenchOptions options;
    options.sizes = {16};
    options.ops_per_size = 50;
    options.seed = 4;
    const auto report = run_bench(options);
    std::ostringstream out;
    report.write(out);
    const auto text = out.str();
    CHECK(text.find("op=sumN N=16 ") != std::string::npos);
    CHECK(text.find("op=find N=16 ") != std::string::npos);
    CHECK(text.find("seed=4") != std::string::npos);
    CHECK(text.find("rng=mt19937_64") != std::string::npos);
    CHECK(text.find("mismatches=0") != std::string::npos);
}

TEST_CASE("invalid bench options are rejected") {
    BenchOptions options;
    options.sizes = {3};
    CHECK_THROWS_AS(run_bench(options), std::invalid_argument);
    options.sizes = {1};
    CHECK_THROWS_AS(run_bench(options), std::invalid_argument);
    options.sizes = {16};
    options.inc_share = -0.5;
    CHECK_THROWS_AS(run_bench(options), std::invalid_argument);
    options.inc_share = 0.0;
    options.sum_share = 0.0;
    options.get_share = 0.0;
    options.find_share = 0.0;
    CHECK_THROWS_AS(run_bench(options), std::invalid_argument);
}
