#pragma once

// Interordinal scaling and the binary-side tooling used to compare IS-itemsets with
// interval patterns: derivation operators, conversion of itemsets to patterns, naive
// closed-itemset and generator miners, and the local/global redundancy diagnostics.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "intpat/dataset.hpp"
#include "intpat/errors.hpp"
#include "intpat/extent.hpp"
#include "intpat/galois.hpp"
#include "intpat/pattern.hpp"

namespace intpat {

enum class Direction : std::uint8_t { Leq = 0, Geq = 1 };

/// "m <= w" or "m >= w" for a value w of attribute m. Ordering follows the column layout
/// of a scaled context: by attribute, all Leq items before Geq items, thresholds ascending.
struct ISItem {
    std::uint32_t attr = 0;
    Direction dir = Direction::Leq;
    Value threshold = 0;

    friend constexpr auto operator<=>(const ISItem&, const ISItem&) = default;
};

/// A set of IS-items kept sorted and duplicate-free.
using ISItemset = std::vector<ISItem>;

inline ISItemset make_itemset(std::vector<ISItem> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

inline std::string item_label(const ISItem& item, const NumericalDataset& ds) {
    return ds.attribute_names()[item.attr] + (item.dir == Direction::Leq ? "<=" : ">=") +
           ds.format_value(item.attr, item.threshold);
}

inline std::string itemset_label(const ISItemset& items, const NumericalDataset& ds) {
    std::string out = "{";
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) out += ", ";
        out += item_label(items[k], ds);
    }
    return out + "}";
}

using ItemBits = boost::dynamic_bitset<std::uint64_t>;

/// Formal context (G, N, I) produced by interordinal scaling.
class BinaryContext {
public:
    BinaryContext(const NumericalDataset& ds, std::vector<ISItem> items) : ds_(&ds), items_(std::move(items)) {
        const std::size_t n = ds.num_objects();
        columns_.assign(items_.size(), Extent(n));
        rows_.assign(n, ItemBits(items_.size()));
        for (std::size_t k = 0; k < items_.size(); ++k) {
            const auto& it = items_[k];
            index_.emplace(key(it), k);
            for (ObjectIndex g = 0; g < n; ++g) {
                const Value v = ds.value(g, it.attr);
                if (it.dir == Direction::Leq ? v <= it.threshold : v >= it.threshold) {
                    columns_[k].insert(g);
                    rows_[g].set(k);
                }
            }
        }
    }

    const NumericalDataset& dataset() const noexcept { return *ds_; }
    std::size_t num_objects() const noexcept { return rows_.size(); }
    std::size_t num_items() const noexcept { return items_.size(); }
    const std::vector<ISItem>& items() const noexcept { return items_; }
    const ISItem& item(std::size_t k) const { return items_[k]; }
    std::string label(std::size_t k) const { return item_label(items_[k], *ds_); }

    bool incident(ObjectIndex g, std::size_t k) const { return rows_[g].test(k); }
    const Extent& column(std::size_t k) const { return columns_[k]; }
    const ItemBits& row(ObjectIndex g) const { return rows_[g]; }

    std::optional<std::size_t> index_of(const ISItem& item) const {
        const auto it = index_.find(key(item));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    ItemBits to_bits(const ISItemset& items) const {
        ItemBits bits(num_items());
        for (const auto& item : items) {
            const auto k = index_of(item);
            if (!k) throw PreconditionError("item " + item_label(item, *ds_) + " is not in the context");
            bits.set(*k);
        }
        return bits;
    }

    ISItemset to_itemset(const ItemBits& bits) const {
        ISItemset out;
        for (auto k = bits.find_first(); k != ItemBits::npos; k = bits.find_next(k)) out.push_back(items_[k]);
        return out;
    }

    /// B' for a bitset of items.
    Extent objects_having(const ItemBits& bits) const {
        Extent out(num_objects(), true);
        for (auto k = bits.find_first(); k != ItemBits::npos; k = bits.find_next(k)) out &= columns_[k];
        return out;
    }

    /// A' as a bitset of items.
    ItemBits items_shared_by(const Extent& a) const {
        ItemBits out(num_items());
        out.set();
        a.for_each([&](ObjectIndex g) { out &= rows_[g]; });
        return out;
    }

private:
    static std::string key(const ISItem& it) {
        return std::to_string(it.attr) + (it.dir == Direction::Leq ? "<" : ">") + std::to_string(it.threshold);
    }

    const NumericalDataset* ds_;
    std::vector<ISItem> items_;
    std::vector<Extent> columns_;
    std::vector<ItemBits> rows_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Builds 2·|W_m| items per attribute: m<=w for ascending w, then m>=w for ascending w.
inline BinaryContext interordinal_scale(const NumericalDataset& ds) {
    std::vector<ISItem> items;
    for (std::uint32_t i = 0; i < ds.num_attributes(); ++i) {
        for (Value w : ds.range(i)) items.push_back({i, Direction::Leq, w});
        for (Value w : ds.range(i)) items.push_back({i, Direction::Geq, w});
    }
    return BinaryContext(ds, std::move(items));
}

/// A' = items shared by every object of A (all items for an empty A).
inline ISItemset prime_objects(const Extent& a, const BinaryContext& ctx) {
    return ctx.to_itemset(ctx.items_shared_by(a));
}

/// B' = objects having every item of B (all objects for an empty B).
inline Extent prime_items(const ISItemset& b, const BinaryContext& ctx) { return ctx.objects_having(ctx.to_bits(b)); }

/// Per attribute, lo = the largest Geq threshold and hi = the smallest Leq threshold,
/// defaulting to the range ends. Throws ContradictionError when lo > hi somewhere.
inline IntervalPattern itemset_to_pattern(const ISItemset& b, const NumericalDataset& ds) {
    std::vector<Interval> out;
    for (std::size_t i = 0; i < ds.num_attributes(); ++i) out.push_back({ds.range(i).front(), ds.range(i).back()});
    for (const auto& item : b) {
        if (item.attr >= ds.num_attributes()) throw PreconditionError("item attribute out of range");
        if (!ds.rank_of(item.attr, item.threshold))
            throw PreconditionError("item threshold " + item_label(item, ds) + " is not in the attribute range");
        auto& iv = out[item.attr];
        if (item.dir == Direction::Leq)
            iv.hi = std::min(iv.hi, item.threshold);
        else
            iv.lo = std::max(iv.lo, item.threshold);
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].lo > out[i].hi)
            throw ContradictionError("contradictory constraints on attribute '" + ds.attribute_names()[i] + "'");
    return IntervalPattern(std::move(out));
}

inline constexpr std::size_t kDefaultPowersetItems = 24;
inline constexpr std::size_t kDefaultMinerItems = 64;

inline void require_item_guard(const BinaryContext& ctx, std::size_t max_items) {
    if (ctx.num_items() > max_items)
        throw LimitError("context has " + std::to_string(ctx.num_items()) + " items, above the limit of " +
                         std::to_string(max_items) + " (raise the item guard to override)");
}

struct ItemsetRecord {
    ISItemset items;
    Extent extent;
};

/// All closed itemsets (B = B'') with support >= minsup, by Close-by-One over the
/// context's item order.
inline std::vector<ItemsetRecord> mine_closed_itemsets(const BinaryContext& ctx, std::size_t minsup,
                                                       std::size_t max_items = kDefaultMinerItems) {
    require_item_guard(ctx, max_items);
    if (minsup < 1) throw PreconditionError("minsup must be >= 1");
    std::vector<ItemsetRecord> out;
    const std::size_t n_items = ctx.num_items();

    const auto recurse = [&](auto&& self, const Extent& a, const ItemBits& b, std::size_t first) -> void {
        for (std::size_t j = first; j < n_items; ++j) {
            if (b.test(j)) continue;
            Extent c = a & ctx.column(j);
            if (c.size() < minsup) continue;
            const ItemBits d = ctx.items_shared_by(c);
            bool canonical = true;
            for (std::size_t k = 0; k < j && canonical; ++k) canonical = d.test(k) == b.test(k);
            if (!canonical) continue;
            out.push_back({ctx.to_itemset(d), c});
            self(self, c, d, j + 1);
        }
    };

    const Extent all(ctx.num_objects(), true);
    if (all.size() >= minsup) {
        const ItemBits top = ctx.items_shared_by(all);
        out.push_back({ctx.to_itemset(top), all});
        recurse(recurse, all, top, 0);
    }
    return out;
}

/// All itemsets B with support >= minsup such that removing any single item changes B'.
/// Subsets of generators are generators, so the search only extends generators.
inline std::vector<ItemsetRecord> mine_is_generators(const BinaryContext& ctx, std::size_t minsup,
                                                     std::size_t max_items = kDefaultMinerItems) {
    require_item_guard(ctx, max_items);
    if (minsup < 1) throw PreconditionError("minsup must be >= 1");
    std::vector<ItemsetRecord> out;
    const std::size_t n_items = ctx.num_items();
    std::vector<std::size_t> chosen;

    const auto is_generator = [&](const Extent& img) {
        for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
            Extent e(ctx.num_objects(), true);
            for (std::size_t k = 0; k < chosen.size(); ++k)
                if (k != drop) e &= ctx.column(chosen[k]);
            if (e == img) return false;
        }
        return true;
    };
    const auto emit = [&](const Extent& img) {
        ItemBits bits(n_items);
        for (auto k : chosen) bits.set(k);
        out.push_back({ctx.to_itemset(bits), img});
    };
    const auto recurse = [&](auto&& self, const Extent& a, std::size_t first) -> void {
        for (std::size_t j = first; j < n_items; ++j) {
            Extent c = a & ctx.column(j);
            if (c.size() < minsup || c == a) continue;
            chosen.push_back(j);
            if (is_generator(c)) {
                emit(c);
                self(self, c, j + 1);
            }
            chosen.pop_back();
        }
    };

    const Extent all(ctx.num_objects(), true);
    if (all.size() >= minsup) {
        emit(all);
        recurse(recurse, all, 0);
    }
    return out;
}

/// Outcome of enumerating every IS-itemset of a small context.
struct RedundancyReport {
    std::size_t num_items = 0;
    BigInt all_itemsets;                       ///< 2^|N|, every itemset regardless of image
    std::uint64_t with_image_including_empty = 0; ///< itemsets with non-empty image, counting ∅
    std::uint64_t with_image = 0;              ///< non-empty itemsets with non-empty image
    std::vector<std::uint64_t> by_min_support; ///< [k-1] = non-empty itemsets with support >= k
    std::uint64_t distinct_patterns = 0;       ///< distinct interval patterns they map to
    BigInt search_space;                       ///< |D| of the dataset
};

/// Enumerates all IS-itemsets with non-empty image and the patterns they map to. The
/// counts under the alternative readings (∅ included, every itemset, each minimum
/// support) are reported alongside.
inline RedundancyReport count_nonredundant_correspondence(const BinaryContext& ctx, const NumericalDataset& ds,
                                                          std::size_t max_items = kDefaultPowersetItems) {
    require_item_guard(ctx, max_items);
    RedundancyReport rep;
    rep.num_items = ctx.num_items();
    rep.all_itemsets = BigInt(1) << ctx.num_items();
    rep.search_space = search_space_size(ds);
    rep.by_min_support.assign(ctx.num_objects(), 0);
    std::unordered_set<IntervalPattern> patterns;
    std::vector<std::size_t> chosen;

    // Supersets of an itemset with empty image also have an empty image.
    const auto recurse = [&](auto&& self, const Extent& a, std::size_t first) -> void {
        ++rep.with_image_including_empty;
        if (!chosen.empty()) {
            ++rep.with_image;
            for (std::size_t k = 1; k <= a.size(); ++k) ++rep.by_min_support[k - 1];
        }
        ItemBits bits(ctx.num_items());
        for (auto k : chosen) bits.set(k);
        patterns.insert(itemset_to_pattern(ctx.to_itemset(bits), ds));
        for (std::size_t j = first; j < ctx.num_items(); ++j) {
            Extent c = a & ctx.column(j);
            if (c.empty()) continue;
            chosen.push_back(j);
            self(self, c, j + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, Extent(ctx.num_objects(), true), 0);
    rep.distinct_patterns = patterns.size();
    return rep;
}

/// Two incomparable IS-generators with the same image whose patterns are comparable:
/// `dominating` ⊑ `subsumed`, so `subsumed` is not an interval pattern generator.
struct RedundancyWitness {
    ISItemset subsumed_items;
    ISItemset dominating_items;
    IntervalPattern subsumed;
    IntervalPattern dominating;
    Extent extent;
};

inline std::vector<RedundancyWitness> global_redundancy_witnesses(const BinaryContext& ctx,
                                                                  const NumericalDataset& ds, std::size_t minsup,
                                                                  std::size_t max_items = kDefaultMinerItems) {
    const auto gens = mine_is_generators(ctx, minsup, max_items);
    std::map<Extent, std::vector<std::size_t>> by_extent;
    for (std::size_t k = 0; k < gens.size(); ++k) by_extent[gens[k].extent].push_back(k);

    const auto subset = [](const ISItemset& a, const ISItemset& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::vector<RedundancyWitness> out;
    for (const auto& [extent, members] : by_extent) {
        std::vector<IntervalPattern> pats;
        for (auto k : members) pats.push_back(itemset_to_pattern(gens[k].items, ds));
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = 0; y < members.size(); ++y) {
                if (x == y || pats[x] == pats[y] || !leq(pats[y], pats[x])) continue;
                const auto& nx = gens[members[x]].items;
                const auto& ny = gens[members[y]].items;
                if (subset(nx, ny) || subset(ny, nx)) continue;
                out.push_back({nx, ny, pats[x], pats[y], extent});
            }
        }
    }
    return out;
}

} // namespace intpat
