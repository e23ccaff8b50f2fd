#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "intpat/intpat.hpp"

namespace intpat::testing {

inline const std::string kDataDir = INTPAT_DATA_DIR;
inline const std::string kGoldenDir = INTPAT_GOLDEN_DIR;

/// The five-object, three-attribute running example.
inline NumericalDataset running_example() {
    return NumericalDataset::from_rows({{5, 7, 6}, {6, 8, 4}, {4, 8, 5}, {4, 9, 8}, {5, 8, 5}});
}

/// The running example restricted to m1 and m3.
inline NumericalDataset running_example_m1_m3() { return running_example().project({0, 2}); }

inline IntervalPattern pat(std::initializer_list<std::pair<Value, Value>> ivs) {
    std::vector<Interval> out;
    for (auto [lo, hi] : ivs) out.push_back({lo, hi});
    return IntervalPattern(std::move(out));
}

inline Extent ext(const NumericalDataset& ds, std::initializer_list<const char*> ids) {
    Extent e(ds.num_objects());
    for (const char* id : ids) e.insert(ds.object_index(id));
    return e;
}

/// Random integer dataset: |G| in [1, max_objects], |M| in [1, max_attrs], values in [0, max_value].
inline NumericalDataset random_dataset(std::mt19937& rng, std::size_t max_objects = 6, std::size_t max_attrs = 3,
                                       Value max_value = 5) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_objects);
    std::uniform_int_distribution<std::size_t> m_dist(1, max_attrs);
    std::uniform_int_distribution<Value> v_dist(0, max_value);
    const std::size_t n = n_dist(rng);
    const std::size_t m = m_dist(rng);
    std::vector<std::vector<Value>> rows(n, std::vector<Value>(m));
    for (auto& r : rows)
        for (auto& v : r) v = v_dist(rng);
    return NumericalDataset::from_rows(rows);
}

using PatternSet = std::set<std::pair<IntervalPattern, std::vector<ObjectIndex>>>;

template <class Records>
PatternSet as_set(const Records& records) {
    PatternSet out;
    for (const auto& r : records) out.emplace(r.pattern, r.extent.indices());
    return out;
}

} // namespace intpat::testing
