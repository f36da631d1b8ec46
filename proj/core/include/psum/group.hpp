#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

namespace psum {

// Element contract for the partial-sum containers: an abelian group
// presented as a context object. Elements are copyable values with an
// equality test; the containers touch them only through the context.
template <typename G>
concept GroupContext =
    std::copyable<typename G::value_type> &&
    std::equality_comparable<typename G::value_type> &&
    requires(const G& g, const typename G::value_type& a, const typename G::value_type& b) {
        { g.identity() } -> std::convertible_to<typename G::value_type>;
        { g.combine(a, b) } -> std::convertible_to<typename G::value_type>;
        { g.invert(a) } -> std::convertible_to<typename G::value_type>;
    };

// Group context with a translation-invariant total order; search by
// cumulative sum (find) needs this.
template <typename G>
concept OrderedGroupContext =
    GroupContext<G> &&
    requires(const G& g, const typename G::value_type& a, const typename G::value_type& b) {
        { g.less(a, b) } -> std::convertible_to<bool>;
    };

// Reference instantiation: 64-bit integers with checked arithmetic.
// Overflow throws instead of wrapping.
struct Int64Group {
    using value_type = std::int64_t;

    value_type identity() const noexcept { return 0; }

    value_type combine(value_type a, value_type b) const {
        value_type r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("Int64Group::combine: overflow");
        return r;
    }

    value_type invert(value_type a) const {
        if (a == std::numeric_limits<value_type>::min())
            throw std::overflow_error("Int64Group::invert: overflow");
        return -a;
    }

    bool less(value_type a, value_type b) const noexcept { return a < b; }
};

// Doubles under addition. NOT a true group: rounding breaks associativity,
// so exact-equality checks are limited to integer contexts and float users
// get tolerance-based comparisons instead.
struct DoubleGroup {
    using value_type = double;

    value_type identity() const noexcept { return 0.0; }
    value_type combine(value_type a, value_type b) const noexcept { return a + b; }
    value_type invert(value_type a) const noexcept { return -a; }
    bool less(value_type a, value_type b) const noexcept { return a < b; }
};

enum class GroupLaw { Associativity, Identity, Inverse, Commutativity };
enum class OrderLaw { Totality, Transitivity, TranslationInvariance };

constexpr std::string_view law_name(GroupLaw law) noexcept {
    switch (law) {
        case GroupLaw::Associativity: return "associativity";
        case GroupLaw::Identity: return "identity";
        case GroupLaw::Inverse: return "inverse";
        case GroupLaw::Commutativity: return "commutativity";
    }
    return "unknown";
}

constexpr std::string_view law_name(OrderLaw law) noexcept {
    switch (law) {
        case OrderLaw::Totality: return "totality";
        case OrderLaw::Transitivity: return "transitivity";
        case OrderLaw::TranslationInvariance: return "translation invariance";
    }
    return "unknown";
}

template <GroupContext G>
struct LawViolation {
    GroupLaw law;
    // witness elements; single-element laws repeat the offender
    std::array<typename G::value_type, 3> witness;
};

template <OrderedGroupContext G>
struct OrderViolation {
    OrderLaw law;
    std::array<typename G::value_type, 3> witness;
};

// Checks the four group laws over every triple drawn from `samples`.
// Violations are data, not errors: the first one found is returned with
// its witness.
template <GroupContext G>
std::optional<LawViolation<G>> check_group_laws(const G& g,
                                                std::span<const typename G::value_type> samples) {
    if (samples.empty())
        throw std::invalid_argument("check_group_laws: samples must be nonempty");
    using V = typename G::value_type;
    // axiom order: associativity, identity, inverse, commutativity
    for (const V& a : samples)
        for (const V& b : samples)
            for (const V& c : samples)
                if (!(g.combine(g.combine(a, b), c) == g.combine(a, g.combine(b, c))))
                    return LawViolation<G>{GroupLaw::Associativity, {a, b, c}};
    for (const V& a : samples) {
        if (!(g.combine(a, g.identity()) == a) || !(g.combine(g.identity(), a) == a))
            return LawViolation<G>{GroupLaw::Identity, {a, a, a}};
        if (!(g.combine(a, g.invert(a)) == g.identity()))
            return LawViolation<G>{GroupLaw::Inverse, {a, a, a}};
    }
    for (const V& a : samples)
        for (const V& b : samples)
            if (!(g.combine(a, b) == g.combine(b, a)))
                return LawViolation<G>{GroupLaw::Commutativity, {a, b, b}};
    return std::nullopt;
}

// Order counterpart: totality (trichotomy with equality), transitivity,
// and translation invariance of less under combine.
template <OrderedGroupContext G>
std::optional<OrderViolation<G>> check_order_laws(const G& g,
                                                  std::span<const typename G::value_type> samples) {
    if (samples.empty())
        throw std::invalid_argument("check_order_laws: samples must be nonempty");
    using V = typename G::value_type;
    for (const V& a : samples)
        for (const V& b : samples) {
            const int ways = int(g.less(a, b)) + int(g.less(b, a)) + int(a == b);
            if (ways != 1)
                return OrderViolation<G>{OrderLaw::Totality, {a, b, b}};
        }
    for (const V& a : samples)
        for (const V& b : samples)
            for (const V& c : samples) {
                if (g.less(a, b) && g.less(b, c) && !g.less(a, c))
                    return OrderViolation<G>{OrderLaw::Transitivity, {a, b, c}};
                if (g.less(a, b) && !g.less(g.combine(a, c), g.combine(b, c)))
                    return OrderViolation<G>{OrderLaw::TranslationInvariance, {a, b, c}};
            }
    return std::nullopt;
}

}  // namespace psum
