#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "array_file.hpp"
#include "psum/bench.hpp"
#include "psum/sampler.hpp"
#include "psum/sum_tree.hpp"
#include "selftest.hpp"

namespace {

using psum::Int64Group;
using psum::PartialSumTree;
using psum::cli::ArrayFileError;
using psum::cli::read_array_file;
using psum::cli::write_array_file;

using Tree = PartialSumTree<Int64Group>;

// command-line misuse that CLI11 cannot see (e.g. trace arity); exit 2
struct UsageError : ArrayFileError {
    using ArrayFileError::ArrayFileError;
};

Tree load_tree(const std::filesystem::path& path) {
    const auto values = read_array_file(path);
    return Tree{std::span<const std::int64_t>(values)};
}

std::vector<std::int64_t> logical_values(const Tree& tree) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(tree.size()));
    for (std::int64_t k = 0; k < tree.size(); ++k)
        out.push_back(tree.get(k));
    return out;
}

void store_tree(const std::filesystem::path& path, const Tree& tree) {
    write_array_file(path, logical_values(tree));
}

std::string sequence(std::span<const std::int64_t> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

// trace line layout: the loop index row, then the accumulator row(s),
// then the result
void print_trace(const std::string& op, const Tree& tree, std::span<const std::int64_t> args,
                 std::ostream& out) {
    Tree scratch = tree;  // trace of inc must not touch the caller's file
    if (op == "sumN") {
        if (args.size() != 1)
            throw UsageError("trace sumN expects <k>");
        const auto [result, trace] = scratch.traced_suffix_sum(args[0]);
        out << "i: " << sequence(trace.indices) << " / sm: " << sequence(trace.values)
            << " / result: " << result << '\n';
    } else if (op == "get") {
        if (args.size() != 1)
            throw UsageError("trace get expects <k>");
        const auto [result, trace] = scratch.traced_get(args[0]);
        out << "i: " << sequence(trace.indices) << " / x: " << sequence(trace.values)
            << " / result: " << result << '\n';
    } else if (op == "inc") {
        if (args.size() != 2)
            throw UsageError("trace inc expects <k> <d>");
        const auto trace = scratch.traced_inc(args[0], args[1]);
        out << "i: " << sequence(trace.indices) << '\n';
    } else if (op == "find") {
        if (args.size() != 1)
            throw UsageError("trace find expects <x>");
        const auto [result, trace] = scratch.traced_find(args[0]);
        out << "i: " << sequence(trace.indices) << " / pv: " << sequence(trace.values)
            << " / k: " << sequence(trace.candidates) << " / result: " << result << '\n';
    } else {
        throw UsageError("trace: unknown operation '" + op + "' (sumN, get, inc, find)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"log-time partial sums over an integer array"};
    app.require_subcommand(1);
    std::function<void()> action;

    std::string in_path, out_path, op;
    std::int64_t k = 0, j = 0, d = 0, x = 0;
    std::vector<std::int64_t> trace_args;
    std::int64_t draws = 1000, bench_ops = 1000, max_m = 64, cases = 200;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> sizes = {16, 256, 4096};

    auto* build = app.add_subcommand("build", "read an array file, rebuild it through the tree");
    build->add_option("in", in_path)->required();
    build->add_option("out", out_path)->required();
    build->callback([&] {
        action = [&] { store_tree(out_path, load_tree(in_path)); };
    });

    auto* get = app.add_subcommand("get", "print element k");
    get->add_option("file", in_path)->required();
    get->add_option("k", k)->required();
    get->callback([&] {
        action = [&] { std::cout << load_tree(in_path).get(k) << '\n'; };
    });

    auto* sum = app.add_subcommand("sum", "print the sum of elements j..k inclusive");
    sum->add_option("file", in_path)->required();
    sum->add_option("j", j)->required();
    sum->add_option("k", k)->required();
    sum->callback([&] {
        action = [&] { std::cout << load_tree(in_path).range_sum(j, k) << '\n'; };
    });

    auto* suffix = app.add_subcommand("suffix", "print the sum of elements k..M-1");
    suffix->add_option("file", in_path)->required();
    suffix->add_option("k", k)->required();
    suffix->callback([&] {
        action = [&] { std::cout << load_tree(in_path).suffix_sum(k) << '\n'; };
    });

    auto* inc = app.add_subcommand("inc", "add d to element k, rewriting the file");
    inc->add_option("file", in_path)->required();
    inc->add_option("k", k)->required();
    inc->add_option("d", d)->required();
    inc->callback([&] {
        action = [&] {
            Tree tree = load_tree(in_path);
            tree.inc(k, d);
            store_tree(in_path, tree);
        };
    });

    auto* set = app.add_subcommand("set", "assign x to element k, rewriting the file");
    set->add_option("file", in_path)->required();
    set->add_option("k", k)->required();
    set->add_option("x", x)->required();
    set->callback([&] {
        action = [&] {
            Tree tree = load_tree(in_path);
            tree.set(k, x);
            store_tree(in_path, tree);
        };
    });

    auto* find = app.add_subcommand("find", "print k with suffix(k+1) <= x < suffix(k)");
    find->add_option("file", in_path)->required();
    find->add_option("x", x)->required();
    find->callback([&] {
        action = [&] { std::cout << load_tree(in_path).find(x) << '\n'; };
    });

    auto* sample = app.add_subcommand("sample", "draw weighted events, print per-event counts");
    sample->add_option("file", in_path)->required();
    sample->add_option("--draws", draws, "number of draws")->capture_default_str();
    sample->add_option("--seed", seed, "generator seed")->capture_default_str();
    sample->callback([&] {
        action = [&] {
            const auto weights = read_array_file(in_path);
            psum::WeightedSampler sampler{std::span<const std::int64_t>(weights), seed};
            const auto counts = sampler.histogram(draws);
            std::cout << "# rng=" << psum::WeightedSampler::rng_name() << " seed=" << seed
                      << " draws=" << draws << '\n';
            for (const auto count : counts)
                std::cout << count << '\n';
        };
    });

    auto* bench = app.add_subcommand("bench", "run the counter/timing harness");
    bench->add_option("--sizes", sizes, "capacities, powers of two >= 2")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--ops", bench_ops, "operations per size")->capture_default_str();
    bench->add_option("--seed", seed, "generator seed")->capture_default_str();
    bench->callback([&] {
        action = [&] {
            psum::BenchOptions options;
            options.sizes = sizes;
            options.ops_per_size = bench_ops;
            options.seed = seed;
            psum::run_bench(options).write(std::cout);
        };
    });

    auto* selftest = app.add_subcommand("selftest", "differential test against the naive array");
    selftest->add_option("--max-m", max_m, "largest logical size")->capture_default_str();
    selftest->add_option("--cases", cases, "cases per size")->capture_default_str();
    selftest->add_option("--seed", seed, "generator seed")->capture_default_str();
    selftest->callback([&] {
        action = [&] {
            if (!psum::cli::run_selftest(max_m, cases, seed, std::cout))
                throw std::runtime_error("selftest failed");
        };
    });

    auto* trace = app.add_subcommand("trace", "print the loop trace of sumN, get, inc or find");
    trace->add_option("file", in_path)->required();
    trace->add_option("op", op)->required();
    trace->add_option("args", trace_args);
    trace->callback([&] {
        action = [&] {
            print_trace(op, load_tree(in_path),
                        std::span<const std::int64_t>(trace_args), std::cout);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // malformed command line
    }

    try {
        action();
    } catch (const ArrayFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
