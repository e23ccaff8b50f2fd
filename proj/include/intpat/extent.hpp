#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace intpat {

using ObjectIndex = std::uint32_t;

/// A set of objects of one dataset, stored as a bitset over object indices.
/// Iteration follows the dataset's object order.
class Extent {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    Extent() = default;
    explicit Extent(std::size_t universe, bool full = false) : bits_(universe) {
        if (full) bits_.set();
    }
    Extent(std::size_t universe, std::initializer_list<ObjectIndex> members) : bits_(universe) {
        for (auto g : members) bits_.set(g);
    }
    explicit Extent(Bits bits) : bits_(std::move(bits)) {}

    static Extent from_indices(std::size_t universe, const std::vector<ObjectIndex>& members) {
        Extent e(universe);
        for (auto g : members) e.insert(g);
        return e;
    }

    std::size_t universe() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    bool contains(ObjectIndex g) const { return bits_.test(g); }
    void insert(ObjectIndex g) { bits_.set(g); }
    void erase(ObjectIndex g) { bits_.reset(g); }

    bool is_subset_of(const Extent& other) const { return bits_.is_subset_of(other.bits_); }

    Extent& operator&=(const Extent& other) {
        bits_ &= other.bits_;
        return *this;
    }
    friend Extent operator&(Extent a, const Extent& b) { return a &= b; }

    /// Calls f(g) for each member in increasing index order.
    template <class F>
    void for_each(F&& f) const {
        for (auto g = bits_.find_first(); g != Bits::npos; g = bits_.find_next(g))
            f(static_cast<ObjectIndex>(g));
    }

    std::vector<ObjectIndex> indices() const {
        std::vector<ObjectIndex> out;
        out.reserve(size());
        for_each([&](ObjectIndex g) { out.push_back(g); });
        return out;
    }

    const Bits& bits() const noexcept { return bits_; }

    friend bool operator==(const Extent& a, const Extent& b) { return a.bits_ == b.bits_; }
    /// Orders by sorted member sequence (lexicographic on indices), universe size first.
    friend bool operator<(const Extent& a, const Extent& b) {
        if (a.universe() != b.universe()) return a.universe() < b.universe();
        const auto ia = a.indices();
        const auto ib = b.indices();
        return ia < ib;
    }

private:
    Bits bits_;
};

} // namespace intpat

template <>
struct std::hash<intpat::Extent> {
    std::size_t operator()(const intpat::Extent& e) const noexcept {
        return boost::hash_value(e.bits());
    }
};
