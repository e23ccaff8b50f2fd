#pragma once

// JSON and CSV renderings: patterns as arrays of [lo, hi] pairs in attribute order,
// mined records as one JSON object per line, scaled contexts as 0/1 tables.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "intpat/dataset.hpp"
#include "intpat/errors.hpp"
#include "intpat/extent.hpp"
#include "intpat/galois.hpp"
#include "intpat/pattern.hpp"
#include "intpat/scaling.hpp"

namespace intpat {

using Json = nlohmann::ordered_json;

inline Json value_to_json(const NumericalDataset& ds, std::size_t attr, Value v) {
    if (ds.scale(attr) == 0) return Json(v);
    return Json(units_to_double(v, ds.scale(attr)));
}

inline Json pattern_to_json(const IntervalPattern& p, const NumericalDataset& ds) {
    detail::require_dimension(p.size(), ds);
    Json out = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        out.push_back(Json::array({value_to_json(ds, i, p[i].lo), value_to_json(ds, i, p[i].hi)}));
    return out;
}

/// Parses [[lo,hi],...]; bounds are read exactly from their decimal text.
inline IntervalPattern pattern_from_json(const Json& j, const NumericalDataset& ds) {
    if (!j.is_array() || j.size() != ds.num_attributes())
        throw DataError("pattern must be an array of " + std::to_string(ds.num_attributes()) + " [lo,hi] pairs");
    std::vector<Interval> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& pair = j[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw DataError("interval " + std::to_string(i) + " is not a [lo,hi] pair of numbers");
        out.push_back({ds.parse_value(i, pair[0].dump()), ds.parse_value(i, pair[1].dump())});
    }
    return IntervalPattern(std::move(out));
}

inline Json extent_to_json(const Extent& e, const NumericalDataset& ds) {
    Json out = Json::array();
    e.for_each([&](ObjectIndex g) { out.push_back(ds.object_ids()[g]); });
    return out;
}

inline Json record_to_json(const IntervalPattern& p, const Extent& e, const NumericalDataset& ds) {
    Json out;
    out["pattern"] = pattern_to_json(p, ds);
    out["support"] = e.size();
    out["extent"] = extent_to_json(e, ds);
    return out;
}

inline Json record_to_json(const PatternRecord& r, const NumericalDataset& ds) {
    return record_to_json(r.pattern, r.extent, ds);
}

inline Json itemset_to_json(const ISItemset& items, const NumericalDataset& ds) {
    Json out = Json::array();
    for (const auto& item : items) out.push_back(item_label(item, ds));
    return out;
}

/// Header "id,<item labels>" then one 0/1 row per object.
inline void write_context_csv(std::ostream& out, const BinaryContext& ctx) {
    const auto& ds = ctx.dataset();
    out << "id";
    for (std::size_t k = 0; k < ctx.num_items(); ++k) out << ',' << ctx.label(k);
    out << '\n';
    for (ObjectIndex g = 0; g < ctx.num_objects(); ++g) {
        out << ds.object_ids()[g];
        for (std::size_t k = 0; k < ctx.num_items(); ++k) out << ',' << (ctx.incident(g, k) ? '1' : '0');
        out << '\n';
    }
}

inline Json context_to_json(const BinaryContext& ctx) {
    const auto& ds = ctx.dataset();
    Json out;
    out["objects"] = ds.object_ids();
    Json items = Json::array();
    for (std::size_t k = 0; k < ctx.num_items(); ++k) items.push_back(ctx.label(k));
    out["items"] = std::move(items);
    Json rows = Json::array();
    for (ObjectIndex g = 0; g < ctx.num_objects(); ++g) {
        Json row = Json::array();
        for (std::size_t k = 0; k < ctx.num_items(); ++k) row.push_back(ctx.incident(g, k) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    out["incidence"] = std::move(rows);
    return out;
}

} // namespace intpat
