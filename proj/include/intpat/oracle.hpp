#pragma once

// Brute-force reference: enumerate the whole interval-pattern search space of a small
// dataset, group patterns by image and read closed patterns and generators off each
// equivalence class. Images are computed by scanning the dataset, independently of the
// bitset machinery the miners use.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "intpat/dataset.hpp"
#include "intpat/errors.hpp"
#include "intpat/extent.hpp"
#include "intpat/galois.hpp"
#include "intpat/pattern.hpp"

namespace intpat {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// The cap from INTPAT_ORACLE_CAP, or kDefaultOracleCap when unset.
inline std::uint64_t oracle_cap_from_env() {
    const char* raw = std::getenv("INTPAT_ORACLE_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw PreconditionError(std::string("INTPAT_ORACLE_CAP is not a non-negative integer: '") + raw + "'");
    }
}

inline void require_within_cap(const NumericalDataset& ds, std::uint64_t cap) {
    const BigInt size = search_space_size(ds);
    if (size > cap)
        throw LimitError("search space has " + size.str() + " patterns, above the oracle cap of " +
                         std::to_string(cap));
}

/// Calls f(pattern) for every pattern whose bounds lie in W_m, each exactly once.
template <class F>
void for_each_pattern(const NumericalDataset& ds, std::uint64_t cap, F&& f) {
    require_within_cap(ds, cap);
    const std::size_t m = ds.num_attributes();
    // Odometer over (lo, hi) pairs per attribute.
    std::vector<Interval> current;
    std::vector<std::size_t> lo(m, 0), hi(m, 0);
    for (std::size_t i = 0; i < m; ++i) current.push_back({ds.range(i)[0], ds.range(i)[0]});
    while (true) {
        f(IntervalPattern(current));
        std::size_t i = 0;
        for (; i < m; ++i) {
            const std::size_t w = ds.range(i).size();
            if (hi[i] + 1 < w) {
                ++hi[i];
            } else if (lo[i] + 1 < w) {
                ++lo[i];
                hi[i] = lo[i];
            } else {
                lo[i] = hi[i] = 0;
                current[i] = {ds.range(i)[0], ds.range(i)[0]};
                continue;
            }
            current[i] = {ds.range(i)[lo[i]], ds.range(i)[hi[i]]};
            break;
        }
        if (i == m) return;
    }
}

inline std::vector<IntervalPattern> enumerate_all(const NumericalDataset& ds, std::uint64_t cap = kDefaultOracleCap) {
    std::vector<IntervalPattern> out;
    for_each_pattern(ds, cap, [&](const IntervalPattern& p) { out.push_back(p); });
    return out;
}

struct EquivalenceClass {
    Extent extent;
    std::vector<IntervalPattern> members;    ///< in enumeration order
    IntervalPattern closed;                  ///< the ⊑-maximum (smallest rectangle)
    std::vector<IntervalPattern> generators; ///< the ⊑-minimal members, sorted
};

struct ClassPartition {
    std::vector<EquivalenceClass> classes; ///< ordered by extent
    std::uint64_t enumerated = 0;          ///< patterns visited
    std::uint64_t empty_image = 0;         ///< patterns with no object (not classified)
};

namespace detail {

inline std::vector<IntervalPattern> one_step_neighbours(const IntervalPattern& d, const NumericalDataset& ds,
                                                        bool widen) {
    std::vector<IntervalPattern> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& w = ds.range(i);
        const std::size_t lo = static_cast<std::size_t>(std::lower_bound(w.begin(), w.end(), d[i].lo) - w.begin());
        const std::size_t hi = static_cast<std::size_t>(std::lower_bound(w.begin(), w.end(), d[i].hi) - w.begin());
        if (widen) {
            if (lo > 0) {
                auto e = d;
                e[i].lo = w[lo - 1];
                out.push_back(std::move(e));
            }
            if (hi + 1 < w.size()) {
                auto e = d;
                e[i].hi = w[hi + 1];
                out.push_back(std::move(e));
            }
        } else if (lo < hi) {
            auto e = d;
            e[i].lo = w[lo + 1];
            out.push_back(std::move(e));
            e = d;
            e[i].hi = w[hi - 1];
            out.push_back(std::move(e));
        }
    }
    return out;
}

} // namespace detail

/// Partitions the search space by image and keeps the classes with support >= minsup.
/// Within a class, a member is a generator iff no one-step widening stays in the class,
/// and closed iff no one-step narrowing does; exactly one closed member must exist.
inline ClassPartition classes(const NumericalDataset& ds, std::size_t minsup,
                              std::uint64_t cap = kDefaultOracleCap) {
    if (minsup < 1) throw PreconditionError("minsup must be >= 1");
    ClassPartition out;
    std::map<Extent, std::vector<IntervalPattern>> groups;
    for_each_pattern(ds, cap, [&](const IntervalPattern& p) {
        ++out.enumerated;
        Extent img = image(p, ds);
        if (img.empty()) {
            ++out.empty_image;
            return;
        }
        if (img.size() >= minsup) groups[std::move(img)].push_back(p);
    });

    for (auto& [extent, members] : groups) {
        const std::unordered_set<IntervalPattern> in_class(members.begin(), members.end());
        const auto has_neighbour_in_class = [&](const IntervalPattern& d, bool widen) {
            for (const auto& e : detail::one_step_neighbours(d, ds, widen))
                if (in_class.contains(e)) return true;
            return false;
        };
        EquivalenceClass cls{extent, members, {}, {}};
        std::optional<IntervalPattern> closed;
        for (const auto& d : members) {
            if (!has_neighbour_in_class(d, true)) cls.generators.push_back(d);
            if (!has_neighbour_in_class(d, false)) {
                if (closed) throw std::logic_error("equivalence class with two closed patterns");
                closed = d;
            }
        }
        if (!closed) throw std::logic_error("equivalence class without a closed pattern");
        cls.closed = *closed;
        std::sort(cls.generators.begin(), cls.generators.end());
        out.classes.push_back(std::move(cls));
    }
    return out;
}

/// Closed patterns with support >= minsup and their extents, sorted by pattern.
inline std::vector<PatternRecord> oracle_closed(const NumericalDataset& ds, std::size_t minsup,
                                                std::uint64_t cap = kDefaultOracleCap) {
    std::vector<PatternRecord> out;
    for (const auto& cls : classes(ds, minsup, cap).classes) out.push_back({cls.closed, cls.extent});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.pattern < b.pattern; });
    return out;
}

/// Generators with support >= minsup and their extents, sorted by pattern.
inline std::vector<PatternRecord> oracle_generators(const NumericalDataset& ds, std::size_t minsup,
                                                    std::uint64_t cap = kDefaultOracleCap) {
    std::vector<PatternRecord> out;
    for (const auto& cls : classes(ds, minsup, cap).classes)
        for (const auto& g : cls.generators) out.push_back({g, cls.extent});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.pattern < b.pattern; });
    return out;
}

} // namespace intpat
