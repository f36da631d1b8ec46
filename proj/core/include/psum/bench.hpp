#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace psum {

// Counter-and-timing harness: runs an operation mix against both the tree
// and the naive array with identical inputs, records exact loop-iteration
// counts via the traced operations, and times the plain operations. The
// counters carry the complexity claim; wall times are informational only.
struct BenchOptions {
    std::vector<std::int64_t> sizes;  // capacities, each a power of two >= 2
    std::int64_t ops_per_size = 1000;
    double inc_share = 0.25;  // operation mix, normalized internally
    double sum_share = 0.25;
    double get_share = 0.25;
    double find_share = 0.25;
    std::uint64_t seed = 0;
};

struct BenchRow {
    std::string op;  // sumN | get | inc | find
    std::int64_t n = 0;
    std::int64_t ops = 0;
    std::int64_t max_iterations = 0;
    double mean_iterations = 0.0;
    double tree_ns_per_op = 0.0;   // informational
    double naive_ns_per_op = 0.0;  // informational
};

struct BenchReport {
    std::vector<BenchRow> rows;  // one per (operation, size)
    std::uint64_t seed = 0;
    std::string mix;
    std::string rng;
    std::int64_t mismatches = 0;  // tree/oracle disagreements; 0 for a correct build

    // Key/value text, one self-contained row per (operation, size).
    void write(std::ostream& out) const;
};

BenchReport run_bench(const BenchOptions& options);

}  // namespace psum
