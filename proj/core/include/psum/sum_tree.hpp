#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psum/group.hpp"

namespace psum {

// Largest power of two dividing k, where k = 0 maps to the full capacity.
// For 0 < k < capacity this is the least set bit of k, computed in one
// expression as (capacity + k) & (capacity - k).
inline std::int64_t gcd_pow2(std::int64_t k, std::int64_t capacity) {
    if (capacity <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(capacity)))
        throw std::invalid_argument("gcd_pow2: capacity must be a power of two");
    if (k < 0 || k >= capacity)
        throw std::out_of_range("gcd_pow2: index outside [0, capacity)");
    return (capacity + k) & (capacity - k);
}

// Loop observations collected by the traced_* operations: the loop counter
// at every probe, the accumulator after every change, and (find only) the
// running result index after every advance. Plain operations collect
// nothing and pay no instrumentation cost.
template <typename T>
struct OpTrace {
    std::vector<std::int64_t> indices;
    std::vector<T> values;
    std::vector<std::int64_t> candidates;
};

template <typename T>
struct TracedValue {
    T result;
    OpTrace<T> trace;
};

template <typename T>
struct TracedIndex {
    std::int64_t result;
    OpTrace<T> trace;
};

// An array of M logical values X[0..M-1] kept as mixed window sums: cell k
// stores the fold of X over [k, k + w) clipped at M, where the width w is
// the largest power of two dividing k (the capacity N for k = 0) and N is
// the smallest power of two >= M. Cells whose index would be >= M are not
// stored and read as the identity. This layout serves point updates,
// suffix/range sums and search-by-cumulative-sum in O(log N) while storing
// exactly M elements.
//
// Reads (suffix_sum, range_sum, get, find) are const and safe to run
// concurrently on a shared tree; mutations need exclusive access. No
// internal synchronization.
template <GroupContext G>
class PartialSumTree {
public:
    using context_type = G;
    using value_type = typename G::value_type;
    using index_type = std::int64_t;

    PartialSumTree() : PartialSumTree(G{}) {}
    explicit PartialSumTree(G ctx) : ctx_(std::move(ctx)) {}

    // Builds in O(M): one running prefix fold, then one invert and one
    // combine per cell (fold [k, hi) = fold [0, hi) minus fold [0, k)).
    explicit PartialSumTree(std::span<const value_type> values, G ctx = G{})
        : ctx_(std::move(ctx)),
          capacity_(capacity_for(static_cast<index_type>(values.size()))) {
        const index_type m = static_cast<index_type>(values.size());
        std::vector<value_type> prefix;
        prefix.reserve(values.size() + 1);
        prefix.push_back(ctx_.identity());
        for (const value_type& v : values)
            prefix.push_back(ctx_.combine(prefix.back(), v));
        cells_.reserve(values.size());
        for (index_type k = 0; k < m; ++k) {
            const index_type hi = std::min(k + step(k), m);
            cells_.push_back(ctx_.combine(prefix[static_cast<std::size_t>(hi)],
                                          ctx_.invert(prefix[static_cast<std::size_t>(k)])));
        }
    }

    PartialSumTree(std::initializer_list<value_type> values, G ctx = G{})
        : PartialSumTree(std::span<const value_type>(values.begin(), values.size()),
                         std::move(ctx)) {}

    // M, the number of logical elements.
    index_type size() const noexcept { return static_cast<index_type>(cells_.size()); }

    // N: smallest power of two >= M (1 while M <= 1). Grows by doubling.
    index_type capacity() const noexcept { return capacity_; }

    const G& context() const noexcept { return ctx_; }

    // The stored cells s[0..M-1], for inspection and tests.
    std::span<const value_type> stored() const noexcept { return {cells_.data(), cells_.size()}; }

    // Fold of X[k..M-1]; identity when k = M.
    value_type suffix_sum(index_type k) const { return suffix_sum_impl<false>(k, nullptr); }

    // Fold of X[j..k] inclusive; j = k + 1 is the empty range.
    value_type range_sum(index_type j, index_type k) const {
        if (j == k + 1 && j >= 0 && j <= size() + 1)
            return ctx_.identity();
        if (j < 0 || j > k || k >= size())
            throw std::out_of_range("range_sum: range outside [0, M)");
        return ctx_.combine(suffix_sum(j), ctx_.invert(suffix_sum(k + 1)));
    }

    // X[k], recovered by cancelling the sub-window cells out of s[k].
    value_type get(index_type k) const { return get_impl<false>(k, nullptr); }

    // X[k] becomes combine(X[k], delta). Exactly the cells whose window
    // contains k change. If combine throws partway (checked overflow) the
    // remaining cells are left stale; rebuild to recover.
    void inc(index_type k, const value_type& delta) { inc_impl<false>(k, delta, nullptr); }

    // X[k] becomes x, as inc of the difference to the current value.
    void set(index_type k, const value_type& x) {
        inc(k, ctx_.combine(x, ctx_.invert(get(k))));
    }

    // Some k with suffix_sum(k+1) <= x < suffix_sum(k), unique when no
    // element is negative. Requires identity <= x < suffix_sum(0).
    index_type find(const value_type& x) const
        requires OrderedGroupContext<G>
    { return find_impl<false>(x, nullptr); }

    // Grows M by one with logical value x. When M would exceed N the
    // capacity doubles first, which leaves every stored cell valid: window
    // widths are unchanged for 0 < k < N and the k = 0 window only gains
    // identity elements.
    void append(const value_type& x) {
        if (size() + 1 > capacity_)
            capacity_ *= 2;
        cells_.push_back(ctx_.identity());
        inc(size() - 1, x);
    }

    TracedValue<value_type> traced_suffix_sum(index_type k) const {
        OpTrace<value_type> trace;
        value_type r = suffix_sum_impl<true>(k, &trace);
        return {std::move(r), std::move(trace)};
    }

    TracedValue<value_type> traced_get(index_type k) const {
        OpTrace<value_type> trace;
        value_type r = get_impl<true>(k, &trace);
        return {std::move(r), std::move(trace)};
    }

    OpTrace<value_type> traced_inc(index_type k, const value_type& delta) {
        OpTrace<value_type> trace;
        inc_impl<true>(k, delta, &trace);
        return trace;
    }

    TracedIndex<value_type> traced_find(const value_type& x) const
        requires OrderedGroupContext<G>
    {
        OpTrace<value_type> trace;
        index_type r = find_impl<true>(x, &trace);
        return {r, std::move(trace)};
    }

private:
    static index_type capacity_for(index_type m) noexcept {
        return m <= 1 ? 1 : static_cast<index_type>(std::bit_ceil(static_cast<std::uint64_t>(m)));
    }

    // gcd_pow2 against the current capacity, no revalidation.
    index_type step(index_type i) const noexcept {
        assert(i >= 0 && i < capacity_);
        return (capacity_ + i) & (capacity_ - i);
    }

    const value_type& cell(index_type i) const { return cells_[static_cast<std::size_t>(i)]; }
    value_type& cell(index_type i) { return cells_[static_cast<std::size_t>(i)]; }

    // Boundary rule: cells at or past M read as identity.
    value_type cell_or_identity(index_type i) const {
        return i < size() ? cell(i) : ctx_.identity();
    }

    void check_element_index(index_type k, const char* op) const {
        if (k < 0 || k >= size())
            throw std::out_of_range(std::string(op) + ": index outside [0, M)");
    }

    template <bool Tr>
    value_type suffix_sum_impl(index_type k, OpTrace<value_type>* tr) const {
        if (k < 0 || k > size())
            throw std::out_of_range("suffix_sum: index outside [0, M]");
        value_type acc = ctx_.identity();
        if constexpr (Tr) tr->values.push_back(acc);
        index_type i = k;
        for (;;) {
            if constexpr (Tr) tr->indices.push_back(i);
            if (i >= size()) break;
            acc = ctx_.combine(acc, cell(i));
            if constexpr (Tr) tr->values.push_back(acc);
            i += step(i);
        }
        return acc;
    }

    template <bool Tr>
    value_type get_impl(index_type k, OpTrace<value_type>* tr) const {
        check_element_index(k, "get");
        value_type x = cell(k);
        if constexpr (Tr) tr->values.push_back(x);
        const index_type width = step(k);
        index_type i = 1;
        for (;;) {
            if constexpr (Tr) tr->indices.push_back(i);
            if (!(i < width && k + i < size())) break;
            x = ctx_.combine(x, ctx_.invert(cell(k + i)));
            if constexpr (Tr) tr->values.push_back(x);
            i *= 2;
        }
        return x;
    }

    template <bool Tr>
    void inc_impl(index_type k, const value_type& delta, OpTrace<value_type>* tr) {
        check_element_index(k, "inc");
        // descent k, k - step(k), ..., 0; step(0) = N drives i negative,
        // which is why the index domain is signed
        for (index_type i = k; i >= 0; i -= step(i)) {
            if constexpr (Tr) tr->indices.push_back(i);
            cell(i) = ctx_.combine(cell(i), delta);
        }
    }

    template <bool Tr>
    index_type find_impl(const value_type& x, OpTrace<value_type>* tr) const {
        if (size() == 0)
            throw std::out_of_range("find: empty tree");
        if (ctx_.less(x, ctx_.identity()) || !ctx_.less(x, suffix_sum(0)))
            throw std::out_of_range("find: x outside [identity, suffix_sum(0))");
        index_type k = 0;
        // pivot tracks the suffix sum starting at k + i; the initial read
        // s[N/2] is in bounds because N/2 < M whenever M >= 2
        value_type pivot = cell(capacity_ / 2);
        if constexpr (Tr) {
            tr->values.push_back(pivot);
            tr->candidates.push_back(k);
        }
        index_type i = capacity_ / 2;
        for (;;) {
            if constexpr (Tr) tr->indices.push_back(i);
            if (i <= 0) break;
            if (ctx_.less(x, pivot)) {
                assert(k + i < size());
                pivot = ctx_.combine(
                    pivot, ctx_.combine(cell_or_identity(k + i * 3 / 2), ctx_.invert(cell(k + i))));
                k += i;
                if constexpr (Tr) tr->candidates.push_back(k);
            } else {
                pivot = ctx_.combine(pivot, cell_or_identity(k + i / 2));
            }
            if constexpr (Tr) tr->values.push_back(pivot);
            i /= 2;
        }
        return k;
    }

    G ctx_;
    index_type capacity_ = 1;
    std::vector<value_type> cells_;
};

}  // namespace psum
