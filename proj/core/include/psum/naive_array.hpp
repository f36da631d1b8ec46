#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psum/group.hpp"

namespace psum {

// Plain logical array with linear-scan semantics. This is the reference
// the differential tests hold PartialSumTree to; clarity over speed, and
// every operation touches each input element at most once.
template <GroupContext G>
class NaiveArray {
public:
    using context_type = G;
    using value_type = typename G::value_type;
    using index_type = std::int64_t;

    NaiveArray() : NaiveArray(G{}) {}
    explicit NaiveArray(G ctx) : ctx_(std::move(ctx)) {}
    explicit NaiveArray(std::span<const value_type> values, G ctx = G{})
        : ctx_(std::move(ctx)), values_(values.begin(), values.end()) {}
    NaiveArray(std::initializer_list<value_type> values, G ctx = G{})
        : ctx_(std::move(ctx)), values_(values) {}

    index_type size() const noexcept { return static_cast<index_type>(values_.size()); }
    const G& context() const noexcept { return ctx_; }
    std::span<const value_type> values() const noexcept { return {values_.data(), values_.size()}; }

    value_type suffix_sum(index_type k) const {
        if (k < 0 || k > size())
            throw std::out_of_range("suffix_sum: index outside [0, M]");
        value_type acc = ctx_.identity();
        for (index_type i = k; i < size(); ++i)
            acc = ctx_.combine(acc, at(i));
        return acc;
    }

    value_type range_sum(index_type j, index_type k) const {
        if (j == k + 1 && j >= 0 && j <= size() + 1)
            return ctx_.identity();
        if (j < 0 || j > k || k >= size())
            throw std::out_of_range("range_sum: range outside [0, M)");
        value_type acc = ctx_.identity();
        for (index_type i = j; i <= k; ++i)
            acc = ctx_.combine(acc, at(i));
        return acc;
    }

    value_type get(index_type k) const {
        check_element_index(k, "get");
        return at(k);
    }

    void inc(index_type k, const value_type& delta) {
        check_element_index(k, "inc");
        at(k) = ctx_.combine(at(k), delta);
    }

    void set(index_type k, const value_type& x) {
        check_element_index(k, "set");
        at(k) = x;
    }

    void append(const value_type& x) { values_.push_back(x); }

    // Descending scan for the bracket suffix_sum(k+1) <= x < suffix_sum(k);
    // with negative elements present this picks the largest such k.
    index_type find(const value_type& x) const
        requires OrderedGroupContext<G>
    {
        if (size() == 0)
            throw std::out_of_range("find: empty array");
        if (ctx_.less(x, ctx_.identity()) || !ctx_.less(x, suffix_sum(0)))
            throw std::out_of_range("find: x outside [identity, suffix_sum(0))");
        value_type after = ctx_.identity();  // suffix sum at k + 1
        for (index_type k = size() - 1; k >= 0; --k) {
            const value_type here = ctx_.combine(at(k), after);
            if (!ctx_.less(x, after) && ctx_.less(x, here))
                return k;
            after = here;
        }
        throw std::logic_error("find: no bracket (unreachable for valid input)");
    }

private:
    const value_type& at(index_type i) const { return values_[static_cast<std::size_t>(i)]; }
    value_type& at(index_type i) { return values_[static_cast<std::size_t>(i)]; }

    void check_element_index(index_type k, const char* op) const {
        if (k < 0 || k >= size())
            throw std::out_of_range(std::string(op) + ": index outside [0, M)");
    }

    G ctx_;
    std::vector<value_type> values_;
};

}  // namespace psum
