#pragma once

// Depth-first enumeration of frequent interval pattern generators (MinIntChangeG).
//
// Candidates are the largest rectangles of their class. The root is the full-range
// pattern. A child of candidate b moves one bound starting from the corresponding bound
// of closure(b), so its support is strictly below b's, while every other bound keeps
// b's own (wide) value. Children are visited in reverse lectic order, which guarantees
// that any generator subsuming a later candidate of the same class has already been
// stored; such candidates are discarded together with their subtree.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "intpat/dataset.hpp"
#include "intpat/errors.hpp"
#include "intpat/extent.hpp"
#include "intpat/galois.hpp"
#include "intpat/generator_store.hpp"
#include "intpat/miner_closed.hpp"
#include "intpat/pattern.hpp"

namespace intpat {

enum class StoreKind { Trie, Hash };

inline std::string_view to_string(StoreKind k) { return k == StoreKind::Trie ? "trie" : "hash"; }

struct GeneratorRecord {
    IntervalPattern pattern;
    Extent extent;
    IntervalPattern closure; ///< the closed pattern of the generator's class
};

template <GeneratorStore Store>
class GeneratorMiner {
public:
    /// Receives generator, its image and its closure.
    using Sink = std::function<void(const RankPattern&, const Extent&, const RankPattern&)>;

    GeneratorMiner(const PatternSpace& space, MinerConfig cfg) : space_(&space), cfg_(cfg) {
        validate(cfg_, space.dataset());
    }

    const MinerStats& stats() const noexcept { return stats_; }
    const Store& store() const noexcept { return store_; }

    void run(const Sink& emit) {
        stats_ = {};
        store_ = Store{};
        const RankPattern root = space_->full_range();
        const Extent all = space_->all_objects();
        store_.check_and_insert(root, all);
        const RankPattern root_closure = space_->extent_meet(all);
        ++stats_.emitted;
        emit(root, all, root_closure);
        expand(root, all, root_closure, 0, 1, emit);
    }

private:
    void expand(const RankPattern& b, const Extent& ext, const RankPattern& cl, std::uint32_t first,
                std::size_t depth, const Sink& emit) {
        const auto num_tokens = static_cast<std::uint32_t>(2 * b.size());
        for (std::uint32_t k = num_tokens; k-- > first;) {
            const auto token = ChangeToken::from_ordinal(k);
            const std::size_t j = token.attr;
            if (cl[j].degenerate()) continue;
            RankPattern c = b;
            Extent cext;
            if (token.side == Side::Right) {
                c[j].hi = cl[j].hi - 1;
                cext = ext & space_->at_most(j, c[j].hi);
            } else {
                c[j].lo = cl[j].lo + 1;
                cext = ext & space_->at_least(j, c[j].lo);
            }
            ++stats_.candidates;
            stats_.max_depth = std::max(stats_.max_depth, depth);
            if (cext.size() < cfg_.minsup) {
                ++stats_.infrequent;
                continue;
            }
            if (!store_.check_and_insert(c, cext)) {
                ++stats_.duplicates;
                continue;
            }
            const RankPattern ccl = space_->extent_meet(cext);
            ++stats_.emitted;
            emit(c, cext, ccl);
            expand(c, cext, ccl, k, depth + 1, emit);
        }
    }

    const PatternSpace* space_;
    MinerConfig cfg_;
    Store store_;
    MinerStats stats_;
};

template <GeneratorStore Store>
std::vector<GeneratorRecord> mine_fipg_with(const NumericalDataset& ds, const MinerConfig& cfg,
                                            MinerStats* stats = nullptr) {
    const PatternSpace space(ds);
    GeneratorMiner<Store> miner(space, cfg);
    std::vector<GeneratorRecord> out;
    miner.run([&](const RankPattern& p, const Extent& e, const RankPattern& cl) {
        out.push_back({to_values(p, ds), e, to_values(cl, ds)});
    });
    if (stats) *stats = miner.stats();
    return out;
}

/// All frequent interval pattern generators with their extents and class closures.
inline std::vector<GeneratorRecord> mine_fipg(const NumericalDataset& ds, const MinerConfig& cfg, StoreKind store,
                                              MinerStats* stats = nullptr) {
    return store == StoreKind::Trie ? mine_fipg_with<TrieStore>(ds, cfg, stats)
                                    : mine_fipg_with<HashStore>(ds, cfg, stats);
}

} // namespace intpat
