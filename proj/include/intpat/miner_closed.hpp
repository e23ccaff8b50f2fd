#pragma once

// Depth-first enumeration of frequent closed interval patterns (MinIntChange).
//
// The search starts from the closure of the full object set and repeatedly applies
// minimal changes: a right change lowers one hi bound to the preceding value of W_m,
// a left change raises one lo bound to the following value. Changes are ordered
// lectically by (attribute, side) with Right before Left, and after a token t only
// tokens >= t may be applied. Each change is applied to a closed pattern, so the
// child has strictly smaller support; the child is then closed and kept only if the
// closure did not alter anything that precedes the change in the lectic order
// (the bounds of earlier attributes, and the hi bound of the same attribute after a
// left change). This is Close-by-One over the interordinal items, one item per step.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <unordered_set>
#include <vector>

#include "intpat/dataset.hpp"
#include "intpat/errors.hpp"
#include "intpat/extent.hpp"
#include "intpat/galois.hpp"
#include "intpat/pattern.hpp"

namespace intpat {

enum class Side : std::uint8_t { Right = 0, Left = 1 };

/// A minimal change on one attribute. Tokens are totally ordered: by attribute, then
/// Right before Left.
struct ChangeToken {
    std::uint32_t attr = 0; ///< zero-based attribute index
    Side side = Side::Right;

    constexpr std::uint32_t ordinal() const noexcept { return 2 * attr + static_cast<std::uint32_t>(side); }
    static constexpr ChangeToken from_ordinal(std::uint32_t k) noexcept {
        return {k / 2, static_cast<Side>(k % 2)};
    }

    friend constexpr bool operator==(const ChangeToken&, const ChangeToken&) = default;
    friend constexpr auto operator<=>(const ChangeToken& a, const ChangeToken& b) noexcept {
        return a.ordinal() <=> b.ordinal();
    }
};

/// Minimal support configuration shared by both miners.
struct MinerConfig {
    std::size_t minsup = 1; ///< absolute count, 1 <= minsup <= |G|
    bool parallel = false;  ///< closed miner only: mine top-level subtrees concurrently
};

inline void validate(const MinerConfig& cfg, const NumericalDataset& ds) {
    if (cfg.minsup < 1 || cfg.minsup > ds.num_objects())
        throw PreconditionError("minsup must be in [1, " + std::to_string(ds.num_objects()) + "], got " +
                                std::to_string(cfg.minsup));
}

/// Right minimal change: [a,b] -> [a,v] with v the predecessor of b in W.
/// nullopt when the interval is degenerate (the walk backtracks).
inline std::optional<Interval> mc_right(const Interval& iv, const std::vector<Value>& w) {
    if (iv.lo >= iv.hi) return std::nullopt;
    const auto it = std::lower_bound(w.begin(), w.end(), iv.hi);
    if (it == w.end() || *it != iv.hi || it == w.begin())
        throw PreconditionError("interval bound is not in the attribute range");
    return Interval{iv.lo, *(it - 1)};
}

/// Left minimal change: [a,b] -> [v,b] with v the successor of a in W.
inline std::optional<Interval> mc_left(const Interval& iv, const std::vector<Value>& w) {
    if (iv.lo >= iv.hi) return std::nullopt;
    const auto it = std::lower_bound(w.begin(), w.end(), iv.lo);
    if (it == w.end() || *it != iv.lo || it + 1 == w.end())
        throw PreconditionError("interval bound is not in the attribute range");
    return Interval{*(it + 1), iv.hi};
}

/// Applies `token` to the rank pattern; false when that dimension is degenerate.
inline bool apply_change(RankPattern& p, ChangeToken token) {
    auto& iv = p[token.attr];
    if (iv.degenerate()) return false;
    if (token.side == Side::Right)
        --iv.hi;
    else
        ++iv.lo;
    return true;
}

/// Plain lectic enumeration of every pattern of the search space (no closure, no
/// support pruning). `enter(pattern, token)` is called on each visited pattern with the
/// change that produced it (nullopt for the root), `leave(pattern)` on backtrack.
template <class Enter, class Leave>
void enumerate_lectic(const RankPattern& root, Enter&& enter, Leave&& leave) {
    const auto num_tokens = static_cast<std::uint32_t>(2 * root.size());
    std::function<void(const RankPattern&, std::uint32_t)> walk = [&](const RankPattern& p, std::uint32_t first) {
        for (std::uint32_t k = first; k < num_tokens; ++k) {
            const auto token = ChangeToken::from_ordinal(k);
            RankPattern child = p;
            if (!apply_change(child, token)) continue;
            enter(child, std::optional<ChangeToken>(token));
            walk(child, k);
            leave(child);
        }
    };
    enter(root, std::optional<ChangeToken>{});
    walk(root, 0);
    leave(root);
}

/// One edge of the single-attribute traversal: a change (Right/Left) or a backtrack.
struct WalkStep {
    enum class Kind { Right, Left, Backtrack };
    Kind kind;
    Interval from;
    Interval to;
    friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// Depth-first traversal of all intervals over one sorted range, as a list of edges.
inline std::vector<WalkStep> single_attribute_walk(const std::vector<Value>& w) {
    if (w.empty()) throw PreconditionError("empty range");
    const auto to_value = [&](const RankPattern& p) { return Interval{w[p[0].lo], w[p[0].hi]}; };
    std::vector<WalkStep> steps;
    std::vector<Interval> path;
    enumerate_lectic(
        RankPattern{{0, static_cast<Rank>(w.size() - 1)}},
        [&](const RankPattern& p, std::optional<ChangeToken> token) {
            const Interval here = to_value(p);
            if (token)
                steps.push_back({token->side == Side::Right ? WalkStep::Kind::Right : WalkStep::Kind::Left,
                                 path.back(), here});
            path.push_back(here);
        },
        [&](const RankPattern&) {
            const Interval here = path.back();
            path.pop_back();
            if (!path.empty()) steps.push_back({WalkStep::Kind::Backtrack, here, path.back()});
        });
    return steps;
}

/// The intervals of a single-attribute walk in visiting order.
inline std::vector<Interval> walk_visit_order(const std::vector<Value>& w) {
    std::vector<Interval> out{{w.front(), w.back()}};
    for (const auto& s : single_attribute_walk(w))
        if (s.kind != WalkStep::Kind::Backtrack) out.push_back(s.to);
    return out;
}

/// Counters collected during one mining run.
struct MinerStats {
    std::size_t candidates = 0;      ///< changes applied
    std::size_t infrequent = 0;      ///< candidates pruned by minsup
    std::size_t non_canonical = 0;   ///< closures rejected by the canonicity test
    std::size_t duplicates = 0;      ///< generator miner: candidates already dominated in the store
    std::size_t emitted = 0;
    std::size_t max_depth = 0;       ///< peak candidate-stack depth

    MinerStats& operator+=(const MinerStats& o) {
        candidates += o.candidates;
        infrequent += o.infrequent;
        non_canonical += o.non_canonical;
        duplicates += o.duplicates;
        emitted += o.emitted;
        max_depth = std::max(max_depth, o.max_depth);
        return *this;
    }
};

/// Observed for every candidate the closed miner builds.
struct CandidateEvent {
    ChangeToken token;
    std::size_t parent_support;
    std::size_t candidate_support;
    bool parent_closed; ///< the change was applied to a closed pattern
};

class ClosedMiner {
public:
    using Sink = std::function<void(const RankPattern&, const Extent&)>;
    using Observer = std::function<void(const CandidateEvent&)>;

    ClosedMiner(const PatternSpace& space, MinerConfig cfg) : space_(&space), cfg_(cfg) {
        validate(cfg_, space.dataset());
    }

    /// Disables the canonicity test; every closure is emitted once through an explicit
    /// duplicate filter instead. Exponentially slower; for cross-checking only.
    void set_canonicity(bool on) { canonicity_ = on; }
    void set_observer(Observer obs) { observer_ = std::move(obs); }

    const MinerStats& stats() const noexcept { return stats_; }

    /// Emits every frequent closed pattern exactly once, in depth-first order.
    void run(const Sink& emit) {
        stats_ = {};
        seen_.clear();
        const Extent all = space_->all_objects();
        const RankPattern root = space_->extent_meet(all);
        emit_once(root, all, emit);
        if (!cfg_.parallel || !canonicity_) {
            expand(root, all, 0, 1, emit, stats_);
            return;
        }

        // Subtrees under distinct first tokens are independent; concatenating them in
        // token order reproduces the sequential output.
        struct Branch {
            std::vector<std::pair<RankPattern, Extent>> out;
            MinerStats stats;
        };
        const auto num_tokens = static_cast<std::uint32_t>(2 * space_->num_attributes());
        std::vector<std::future<Branch>> jobs;
        for (std::uint32_t k = 0; k < num_tokens; ++k) {
            jobs.push_back(std::async(std::launch::async, [this, &root, &all, k] {
                Branch b;
                const Sink collect = [&b](const RankPattern& p, const Extent& e) { b.out.emplace_back(p, e); };
                step(root, all, k, 1, collect, b.stats);
                return b;
            }));
        }
        for (auto& job : jobs) {
            Branch b = job.get();
            for (const auto& [p, e] : b.out) emit(p, e);
            stats_ += b.stats;
        }
    }

private:
    void emit_once(const RankPattern& p, const Extent& e, const Sink& emit) {
        if (!canonicity_ && !seen_.insert(p).second) return;
        ++stats_.emitted;
        emit(p, e);
    }

    void expand(const RankPattern& d, const Extent& ext, std::uint32_t first, std::size_t depth, const Sink& emit,
                MinerStats& stats) {
        const auto num_tokens = static_cast<std::uint32_t>(2 * d.size());
        for (std::uint32_t k = first; k < num_tokens; ++k) step(d, ext, k, depth, emit, stats);
    }

    // Applies token k to the closed pattern d, then closes and recurses.
    void step(const RankPattern& d, const Extent& ext, std::uint32_t k, std::size_t depth, const Sink& emit,
              MinerStats& stats) {
        const auto token = ChangeToken::from_ordinal(k);
        const std::size_t j = token.attr;
        RankPattern c = d;
        if (!apply_change(c, token)) return;
        ++stats.candidates;
        stats.max_depth = std::max(stats.max_depth, depth);

        Extent cext = token.side == Side::Right ? ext & space_->at_most(j, c[j].hi)
                                                : ext & space_->at_least(j, c[j].lo);
        const std::size_t sup = cext.size();
        if (observer_) observer_({token, ext.size(), sup, true});
        if (sup < cfg_.minsup) {
            ++stats.infrequent;
            return;
        }
        RankPattern closed = space_->extent_meet(cext);
        if (canonicity_ && !is_canonical(c, closed, token)) {
            ++stats.non_canonical;
            return;
        }
        if (!canonicity_ && !seen_.insert(closed).second) {
            ++stats.duplicates;
        } else {
            ++stats.emitted;
            emit(closed, cext);
        }
        expand(closed, cext, k, depth + 1, emit, stats);
    }

    static bool is_canonical(const RankPattern& candidate, const RankPattern& closed, ChangeToken token) {
        for (std::size_t h = 0; h < token.attr; ++h)
            if (closed[h] != candidate[h]) return false;
        // A left change forbids later right changes on the same attribute.
        if (token.side == Side::Left && closed[token.attr].hi != candidate[token.attr].hi) return false;
        return true;
    }

    const PatternSpace* space_;
    MinerConfig cfg_;
    bool canonicity_ = true;
    Observer observer_;
    MinerStats stats_;
    std::unordered_set<RankPattern> seen_;
};

/// All frequent closed interval patterns with their extents, in depth-first order.
inline std::vector<PatternRecord> mine_fcip(const NumericalDataset& ds, const MinerConfig& cfg,
                                            MinerStats* stats = nullptr) {
    const PatternSpace space(ds);
    ClosedMiner miner(space, cfg);
    std::vector<PatternRecord> out;
    miner.run([&](const RankPattern& p, const Extent& e) { out.push_back({to_values(p, ds), e}); });
    if (stats) *stats = miner.stats();
    return out;
}

} // namespace intpat
