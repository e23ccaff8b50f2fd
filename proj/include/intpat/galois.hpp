#pragma once

// The Galois connection between object sets and interval patterns:
//   image(d)       = { g | d ⊑ δ(g) }          (objects whose point lies in the rectangle)
//   extent_meet(A) = ⊓_{g ∈ A} δ(g)             (bounding box of the points of A)
// and the closure image∘extent_meet with its derived predicates.
//
// Two layers are provided. The free functions work on value-level patterns by scanning
// the dataset; PatternSpace works on rank-level patterns with precomputed per-bound
// bitsets and is what the miners use.

#include <cstddef>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "intpat/dataset.hpp"
#include "intpat/errors.hpp"
#include "intpat/extent.hpp"
#include "intpat/pattern.hpp"

namespace intpat {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
inline void require_dimension(std::size_t size, const NumericalDataset& ds) {
    if (size != ds.num_attributes())
        throw PreconditionError("pattern has " + std::to_string(size) + " intervals, dataset has " +
                                std::to_string(ds.num_attributes()) + " attributes");
}
} // namespace detail

/// Maps value bounds to their positions in W_m. Throws PreconditionError when a bound is
/// not a member of the attribute's range or an interval is reversed.
inline RankPattern to_ranks(const IntervalPattern& d, const NumericalDataset& ds) {
    detail::require_dimension(d.size(), ds);
    std::vector<RankInterval> out;
    out.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto lo = ds.rank_of(i, d[i].lo);
        const auto hi = ds.rank_of(i, d[i].hi);
        if (!lo || !hi)
            throw PreconditionError("bound of attribute '" + ds.attribute_names()[i] + "' is not in its range");
        if (*lo > *hi) throw PreconditionError("interval lo > hi on attribute '" + ds.attribute_names()[i] + "'");
        out.push_back({*lo, *hi});
    }
    return RankPattern(std::move(out));
}

inline IntervalPattern to_values(const RankPattern& p, const NumericalDataset& ds) {
    detail::require_dimension(p.size(), ds);
    std::vector<Interval> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back({ds.range(i)[p[i].lo], ds.range(i)[p[i].hi]});
    return IntervalPattern(std::move(out));
}

/// Checks that every bound of `d` lies in W_m and lo <= hi.
inline void validate(const IntervalPattern& d, const NumericalDataset& ds) { (void)to_ranks(d, ds); }

/// d^□ = { g | m_i(g) ∈ [lo_i, hi_i] for all i }.
inline Extent image(const IntervalPattern& d, const NumericalDataset& ds) {
    detail::require_dimension(d.size(), ds);
    Extent out(ds.num_objects());
    for (ObjectIndex g = 0; g < ds.num_objects(); ++g) {
        bool inside = true;
        for (std::size_t i = 0; i < d.size() && inside; ++i) inside = d[i].contains(ds.value(g, i));
        if (inside) out.insert(g);
    }
    return out;
}

inline std::size_t support(const IntervalPattern& d, const NumericalDataset& ds) { return image(d, ds).size(); }

/// A^□: per attribute, [min over A, max over A]. Undefined (throws) for an empty A.
inline IntervalPattern extent_meet(const Extent& a, const NumericalDataset& ds) {
    if (a.universe() != ds.num_objects()) throw PreconditionError("extent does not belong to this dataset");
    if (a.empty()) throw PreconditionError("meet over an empty extent is undefined");
    std::vector<Interval> out;
    bool first = true;
    a.for_each([&](ObjectIndex g) {
        if (first) {
            for (std::size_t i = 0; i < ds.num_attributes(); ++i) out.push_back({ds.value(g, i), ds.value(g, i)});
            first = false;
            return;
        }
        for (std::size_t i = 0; i < ds.num_attributes(); ++i) {
            out[i].lo = std::min(out[i].lo, ds.value(g, i));
            out[i].hi = std::max(out[i].hi, ds.value(g, i));
        }
    });
    return IntervalPattern(std::move(out));
}

/// d^□□. Throws PreconditionError if d has an empty image.
inline IntervalPattern closure(const IntervalPattern& d, const NumericalDataset& ds) {
    const Extent img = image(d, ds);
    if (img.empty()) throw PreconditionError("closure of a pattern with empty image is undefined");
    return extent_meet(img, ds);
}

inline bool is_closed(const IntervalPattern& d, const NumericalDataset& ds) {
    const Extent img = image(d, ds);
    return !img.empty() && extent_meet(img, ds) == d;
}

inline bool equivalent(const IntervalPattern& c, const IntervalPattern& d, const NumericalDataset& ds) {
    return image(c, ds) == image(d, ds);
}

inline bool is_frequent(const IntervalPattern& d, std::size_t minsup, const NumericalDataset& ds) {
    return support(d, ds) >= minsup;
}

/// All patterns obtained from `d` by widening exactly one bound to the adjacent value
/// of W_m (lo to its predecessor or hi to its successor).
inline std::vector<IntervalPattern> one_step_enlargements(const IntervalPattern& d, const NumericalDataset& ds) {
    const RankPattern r = to_ranks(d, ds);
    std::vector<IntervalPattern> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (r[i].lo > 0) {
            IntervalPattern e = d;
            e[i].lo = ds.range(i)[r[i].lo - 1];
            out.push_back(std::move(e));
        }
        if (r[i].hi + 1 < ds.range(i).size()) {
            IntervalPattern e = d;
            e[i].hi = ds.range(i)[r[i].hi + 1];
            out.push_back(std::move(e));
        }
    }
    return out;
}

/// True iff no one-step enlargement of d keeps its image. Any strictly larger rectangle
/// with the same image passes through such a one-step neighbour, so this is exactly the
/// definition of a generator.
inline bool is_generator(const IntervalPattern& d, const NumericalDataset& ds) {
    const Extent img = image(d, ds);
    for (const auto& e : one_step_enlargements(d, ds))
        if (image(e, ds) == img) return false;
    return true;
}

/// |D| = ∏ |W_m|(|W_m|+1)/2.
inline BigInt search_space_size(const NumericalDataset& ds) {
    BigInt total = 1;
    for (std::size_t i = 0; i < ds.num_attributes(); ++i) {
        const BigInt w = ds.range(i).size();
        total *= w * (w + 1) / 2;
    }
    return total;
}

/// A pattern together with its image.
struct PatternRecord {
    IntervalPattern pattern;
    Extent extent;
    friend bool operator==(const PatternRecord&, const PatternRecord&) = default;
};

/// Rank-level view of a dataset with, for every attribute i and rank r, the bitsets of
/// objects whose rank is <= r and >= r. Holds a reference to the dataset.
class PatternSpace {
public:
    explicit PatternSpace(const NumericalDataset& ds) : ds_(&ds) {
        const std::size_t n = ds.num_objects();
        at_most_.resize(ds.num_attributes());
        at_least_.resize(ds.num_attributes());
        for (std::size_t i = 0; i < ds.num_attributes(); ++i) {
            const std::size_t w = ds.range(i).size();
            std::vector<Extent> exactly(w, Extent(n));
            for (ObjectIndex g = 0; g < n; ++g) exactly[ds.rank(g, i)].insert(g);
            auto& le = at_most_[i];
            auto& ge = at_least_[i];
            le.assign(w, Extent(n));
            ge.assign(w, Extent(n));
            Extent acc(n);
            for (std::size_t r = 0; r < w; ++r) {
                acc = Extent(acc.bits() | exactly[r].bits());
                le[r] = acc;
            }
            acc = Extent(n);
            for (std::size_t r = w; r-- > 0;) {
                acc = Extent(acc.bits() | exactly[r].bits());
                ge[r] = acc;
            }
        }
    }

    const NumericalDataset& dataset() const noexcept { return *ds_; }
    std::size_t num_objects() const noexcept { return ds_->num_objects(); }
    std::size_t num_attributes() const noexcept { return ds_->num_attributes(); }
    Rank range_size(std::size_t attr) const { return static_cast<Rank>(ds_->range(attr).size()); }

    const Extent& at_most(std::size_t attr, Rank r) const { return at_most_[attr][r]; }
    const Extent& at_least(std::size_t attr, Rank r) const { return at_least_[attr][r]; }

    Extent all_objects() const { return Extent(num_objects(), true); }

    /// The full-range pattern ⟨[min W_i, max W_i]⟩ (⊑-minimum of the search space).
    RankPattern full_range() const {
        std::vector<RankInterval> out;
        for (std::size_t i = 0; i < num_attributes(); ++i) out.push_back({0, range_size(i) - 1});
        return RankPattern(std::move(out));
    }

    Extent image(const RankPattern& p) const {
        detail::require_dimension(p.size(), *ds_);
        Extent out = all_objects();
        for (std::size_t i = 0; i < p.size(); ++i) {
            out &= at_least_[i][p[i].lo];
            out &= at_most_[i][p[i].hi];
        }
        return out;
    }

    RankPattern extent_meet(const Extent& a) const {
        if (a.empty()) throw PreconditionError("meet over an empty extent is undefined");
        const std::size_t m = num_attributes();
        std::vector<RankInterval> out(m, RankInterval{std::numeric_limits<Rank>::max(), 0});
        a.for_each([&](ObjectIndex g) {
            for (std::size_t i = 0; i < m; ++i) {
                const Rank r = ds_->rank(g, i);
                if (r < out[i].lo) out[i].lo = r;
                if (r > out[i].hi) out[i].hi = r;
            }
        });
        return RankPattern(std::move(out));
    }

    RankPattern closure(const RankPattern& p) const { return extent_meet(image(p)); }

    /// One-step enlargement test against a known image of `p`.
    bool is_generator(const RankPattern& p, const Extent& img) const {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].lo > 0) {
                RankPattern e = p;
                --e[i].lo;
                if (image(e) == img) return false;
            }
            if (p[i].hi + 1 < range_size(i)) {
                RankPattern e = p;
                ++e[i].hi;
                if (image(e) == img) return false;
            }
        }
        return true;
    }
    bool is_generator(const RankPattern& p) const { return is_generator(p, image(p)); }

private:
    const NumericalDataset* ds_;
    std::vector<std::vector<Extent>> at_most_;
    std::vector<std::vector<Extent>> at_least_;
};

} // namespace intpat
