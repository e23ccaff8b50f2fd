#pragma once

// Interval patterns: vectors of closed intervals, one per attribute, i.e. axis-parallel
// hyper-rectangles. Patterns are ordered by subsumption: c ⊑ d iff every interval of d
// is contained in the corresponding interval of c (d is the smaller rectangle, the more
// specific description). The meet c ⊓ d is the per-dimension interval hull.
//
// The bound type is a parameter so the same algebra serves value-level patterns
// (IntervalPattern) and the rank-level patterns the miners work on (RankPattern).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "intpat/errors.hpp"
#include "intpat/number.hpp"

namespace intpat {

template <class Bound>
struct BasicInterval {
    Bound lo{};
    Bound hi{};

    constexpr bool degenerate() const noexcept { return lo == hi; }
    constexpr bool contains(const Bound& v) const noexcept { return lo <= v && v <= hi; }
    constexpr bool contains(const BasicInterval& other) const noexcept {
        return lo <= other.lo && other.hi <= hi;
    }

    friend constexpr auto operator<=>(const BasicInterval&, const BasicInterval&) = default;
};

template <class Bound>
class BasicPattern {
public:
    using interval_type = BasicInterval<Bound>;

    BasicPattern() = default;
    explicit BasicPattern(std::vector<interval_type> intervals) : intervals_(std::move(intervals)) {}
    BasicPattern(std::initializer_list<interval_type> intervals) : intervals_(intervals) {}

    std::size_t size() const noexcept { return intervals_.size(); }
    const interval_type& operator[](std::size_t i) const { return intervals_[i]; }
    interval_type& operator[](std::size_t i) { return intervals_[i]; }
    auto begin() const noexcept { return intervals_.begin(); }
    auto end() const noexcept { return intervals_.end(); }
    const std::vector<interval_type>& intervals() const noexcept { return intervals_; }

    friend bool operator==(const BasicPattern&, const BasicPattern&) = default;
    friend auto operator<=>(const BasicPattern& a, const BasicPattern& b) {
        return a.intervals_ <=> b.intervals_;
    }

private:
    std::vector<interval_type> intervals_;
};

using Interval = BasicInterval<Value>;
using IntervalPattern = BasicPattern<Value>;

/// Index into an attribute's sorted range W_m.
using Rank = std::uint32_t;
using RankInterval = BasicInterval<Rank>;
using RankPattern = BasicPattern<Rank>;

namespace detail {
template <class Bound>
void require_same_length(const BasicPattern<Bound>& c, const BasicPattern<Bound>& d) {
    if (c.size() != d.size())
        throw PreconditionError("pattern length mismatch: " + std::to_string(c.size()) + " vs " +
                                std::to_string(d.size()));
}
} // namespace detail

/// c ⊓ d: per-dimension interval hull.
template <class Bound>
BasicPattern<Bound> meet(const BasicPattern<Bound>& c, const BasicPattern<Bound>& d) {
    detail::require_same_length(c, d);
    std::vector<BasicInterval<Bound>> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out.push_back({std::min(c[i].lo, d[i].lo), std::max(c[i].hi, d[i].hi)});
    return BasicPattern<Bound>(std::move(out));
}

/// c ⊑ d: each interval of d lies inside the matching interval of c.
template <class Bound>
bool leq(const BasicPattern<Bound>& c, const BasicPattern<Bound>& d) {
    detail::require_same_length(c, d);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].contains(d[i])) return false;
    return true;
}

/// Strict subsumption: c ⊑ d and c != d.
template <class Bound>
bool less(const BasicPattern<Bound>& c, const BasicPattern<Bound>& d) {
    return leq(c, d) && c != d;
}

template <class Bound>
bool comparable(const BasicPattern<Bound>& c, const BasicPattern<Bound>& d) {
    return leq(c, d) || leq(d, c);
}

} // namespace intpat

template <class Bound>
struct std::hash<intpat::BasicPattern<Bound>> {
    std::size_t operator()(const intpat::BasicPattern<Bound>& p) const noexcept {
        std::size_t h = p.size();
        for (const auto& iv : p) {
            h ^= std::hash<Bound>{}(iv.lo) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= std::hash<Bound>{}(iv.hi) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
