#pragma once

// Stores of already-extracted generators, keyed by extent. A candidate is rejected when
// some stored generator with the same extent subsumes it (e ⊑ c); since e ⊑ c implies
// image(c) ⊆ image(e), equal support together with e ⊑ c already means equal extent, so
// keying by extent is the same test as "same support and e ⊑ c".

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "intpat/extent.hpp"
#include "intpat/pattern.hpp"

namespace intpat {

template <class S>
concept GeneratorStore = requires(S s, const S cs, const RankPattern& p, const Extent& e) {
    { s.check_and_insert(p, e) } -> std::same_as<bool>;
    { cs.find(e) } -> std::same_as<const std::vector<RankPattern>*>;
    { cs.num_extents() } -> std::same_as<std::size_t>;
    { cs.num_patterns() } -> std::same_as<std::size_t>;
};

namespace detail {
// True if some e in `stored` satisfies e ⊑ c.
inline bool dominated(const std::vector<RankPattern>& stored, const RankPattern& c) {
    for (const auto& e : stored)
        if (leq(e, c)) return true;
    return false;
}
} // namespace detail

/// Hash map from extent bitset to its generator list.
class HashStore {
public:
    /// Inserts c under `ext` unless a stored pattern e ⊑ c exists there.
    bool check_and_insert(const RankPattern& c, const Extent& ext) {
        auto& list = map_[ext];
        if (detail::dominated(list, c)) return false;
        list.push_back(c);
        ++patterns_;
        return true;
    }

    const std::vector<RankPattern>* find(const Extent& ext) const {
        const auto it = map_.find(ext);
        return it == map_.end() ? nullptr : &it->second;
    }

    std::size_t num_extents() const noexcept { return map_.size(); }
    std::size_t num_patterns() const noexcept { return patterns_; }

private:
    std::unordered_map<Extent, std::vector<RankPattern>> map_;
    std::size_t patterns_ = 0;
};

/// Prefix tree over sorted object-index sequences; each extent is a word and the node
/// at its end carries the generator list. Children are kept in small sorted vectors in
/// a node pool.
class TrieStore {
public:
    TrieStore() { nodes_.emplace_back(); }

    bool check_and_insert(const RankPattern& c, const Extent& ext) {
        std::uint32_t node = 0;
        for (auto g : ext.indices()) node = child_or_create(node, g);
        auto& list = nodes_[node].generators;
        if (detail::dominated(list, c)) return false;
        if (list.empty()) ++words_;
        list.push_back(c);
        ++patterns_;
        return true;
    }

    const std::vector<RankPattern>* find(const Extent& ext) const {
        std::uint32_t node = 0;
        for (auto g : ext.indices()) {
            node = find_child(node, g);
            if (node == kNone) return nullptr;
        }
        const auto& list = nodes_[node].generators;
        return list.empty() ? nullptr : &list;
    }

    std::size_t num_extents() const noexcept { return words_; }
    std::size_t num_patterns() const noexcept { return patterns_; }
    std::size_t num_nodes() const noexcept { return nodes_.size(); }

private:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    struct Node {
        std::vector<std::pair<ObjectIndex, std::uint32_t>> children; // sorted by object index
        std::vector<RankPattern> generators;
    };

    static auto lower(const std::vector<std::pair<ObjectIndex, std::uint32_t>>& kids, ObjectIndex g) {
        return std::lower_bound(kids.begin(), kids.end(), g,
                                [](const auto& kv, ObjectIndex key) { return kv.first < key; });
    }

    std::uint32_t find_child(std::uint32_t node, ObjectIndex g) const {
        const auto& kids = nodes_[node].children;
        const auto it = lower(kids, g);
        return it != kids.end() && it->first == g ? it->second : kNone;
    }

    std::uint32_t child_or_create(std::uint32_t node, ObjectIndex g) {
        auto& kids = nodes_[node].children;
        const auto it = lower(kids, g);
        if (it != kids.end() && it->first == g) return it->second;
        const auto id = static_cast<std::uint32_t>(nodes_.size());
        kids.insert(it, {g, id});
        nodes_.emplace_back(); // invalidates `kids`
        return id;
    }

    std::vector<Node> nodes_;
    std::size_t words_ = 0;
    std::size_t patterns_ = 0;
};

static_assert(GeneratorStore<HashStore>);
static_assert(GeneratorStore<TrieStore>);

/// Free-function form of the store check.
template <GeneratorStore Store>
bool store_check_and_insert(Store& store, const RankPattern& c, const Extent& ext) {
    return store.check_and_insert(c, ext);
}

} // namespace intpat
