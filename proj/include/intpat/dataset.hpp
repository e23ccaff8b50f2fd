#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "intpat/errors.hpp"
#include "intpat/extent.hpp"
#include "intpat/number.hpp"
#include "intpat/pattern.hpp"

namespace intpat {

/// Objects G, attributes M (in canonical column order), and one exact value per cell.
/// Each column is stored in fixed-point units with its own scale (number of fractional
/// digits), so values compare exactly. Immutable after construction.
class NumericalDataset {
public:
    NumericalDataset(std::vector<std::string> object_ids, std::vector<std::string> attribute_names,
                     const std::vector<std::vector<Decimal>>& rows)
        : object_ids_(std::move(object_ids)), attribute_names_(std::move(attribute_names)) {
        const std::size_t n = object_ids_.size();
        const std::size_t m = attribute_names_.size();
        if (n == 0) throw DataError("dataset has no objects");
        if (m == 0) throw DataError("dataset has no attributes");
        if (rows.size() != n) throw DataError("row count does not match object count");
        scales_.assign(m, 0);
        for (std::size_t g = 0; g < n; ++g) {
            if (rows[g].size() != m)
                throw DataError("row " + std::to_string(g + 1) + " has " + std::to_string(rows[g].size()) +
                                " cells, expected " + std::to_string(m));
            for (std::size_t i = 0; i < m; ++i)
                scales_[i] = std::max(scales_[i], fractional_digits(rows[g][i]));
        }
        values_.resize(n * m);
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t i = 0; i < m; ++i) values_[g * m + i] = to_units(rows[g][i], scales_[i]);
        finish();
    }

    /// Integer-valued convenience constructor (scale 0 everywhere).
    NumericalDataset(std::vector<std::string> object_ids, std::vector<std::string> attribute_names,
                     const std::vector<std::vector<Value>>& rows)
        : NumericalDataset(std::move(object_ids), std::move(attribute_names), to_decimals(rows)) {}

    /// Objects named g1..gN and attributes m1..mM.
    static NumericalDataset from_rows(const std::vector<std::vector<Value>>& rows) {
        if (rows.empty()) throw DataError("dataset has no objects");
        return NumericalDataset(default_names("g", rows.size()), default_names("m", rows.front().size()), rows);
    }

    std::size_t num_objects() const noexcept { return object_ids_.size(); }
    std::size_t num_attributes() const noexcept { return attribute_names_.size(); }
    const std::vector<std::string>& object_ids() const noexcept { return object_ids_; }
    const std::vector<std::string>& attribute_names() const noexcept { return attribute_names_; }

    Value value(ObjectIndex g, std::size_t attr) const { return values_[g * num_attributes() + attr]; }
    Rank rank(ObjectIndex g, std::size_t attr) const { return ranks_[g * num_attributes() + attr]; }

    /// Sorted distinct values W_m of attribute `attr`.
    const std::vector<Value>& range(std::size_t attr) const { return ranges_[attr]; }
    int scale(std::size_t attr) const { return scales_[attr]; }

    std::optional<Rank> rank_of(std::size_t attr, Value v) const {
        const auto& w = ranges_[attr];
        const auto it = std::lower_bound(w.begin(), w.end(), v);
        if (it == w.end() || *it != v) return std::nullopt;
        return static_cast<Rank>(it - w.begin());
    }

    std::optional<ObjectIndex> find_object(std::string_view id) const {
        const auto it = object_index_.find(std::string(id));
        if (it == object_index_.end()) return std::nullopt;
        return it->second;
    }
    ObjectIndex object_index(std::string_view id) const {
        if (auto g = find_object(id)) return *g;
        throw DataError("unknown object id '" + std::string(id) + "'");
    }
    std::optional<std::size_t> find_attribute(std::string_view name) const {
        for (std::size_t i = 0; i < attribute_names_.size(); ++i)
            if (attribute_names_[i] == name) return i;
        return std::nullopt;
    }

    /// Parses `text` as a value of attribute `attr`; the result need not lie in W_m.
    Value parse_value(std::size_t attr, std::string_view text) const {
        const auto d = parse_decimal(text);
        if (!d) throw DataError("not a number: '" + std::string(text) + "'");
        return to_units(*d, scales_[attr]);
    }
    std::string format_value(std::size_t attr, Value v) const { return format_units(v, scales_[attr]); }

    /// Description δ(g): the degenerate pattern ⟨[m_i(g), m_i(g)]⟩.
    IntervalPattern description(ObjectIndex g) const {
        std::vector<Interval> out;
        out.reserve(num_attributes());
        for (std::size_t i = 0; i < num_attributes(); ++i) out.push_back({value(g, i), value(g, i)});
        return IntervalPattern(std::move(out));
    }
    IntervalPattern description(std::string_view id) const { return description(object_index(id)); }

    /// Same objects restricted to the given attributes, in the given order.
    NumericalDataset project(const std::vector<std::size_t>& attrs) const {
        std::vector<std::string> names;
        std::vector<std::vector<Decimal>> rows(num_objects());
        for (auto a : attrs) {
            if (a >= num_attributes()) throw PreconditionError("attribute index out of range");
            names.push_back(attribute_names_[a]);
        }
        for (std::size_t g = 0; g < num_objects(); ++g)
            for (auto a : attrs)
                rows[g].push_back(*parse_decimal(format_value(a, value(static_cast<ObjectIndex>(g), a))));
        return NumericalDataset(object_ids_, std::move(names), rows);
    }

private:
    static std::vector<std::vector<Decimal>> to_decimals(const std::vector<std::vector<Value>>& rows) {
        std::vector<std::vector<Decimal>> out;
        out.reserve(rows.size());
        for (const auto& r : rows) {
            auto& o = out.emplace_back();
            for (auto v : r) o.push_back(*parse_decimal(std::to_string(v)));
        }
        return out;
    }

    static std::vector<std::string> default_names(std::string_view prefix, std::size_t n) {
        std::vector<std::string> out;
        for (std::size_t k = 1; k <= n; ++k) out.push_back(std::string(prefix) + std::to_string(k));
        return out;
    }

    void finish() {
        const std::size_t n = num_objects();
        const std::size_t m = num_attributes();
        for (std::size_t g = 0; g < n; ++g)
            if (!object_index_.emplace(object_ids_[g], static_cast<ObjectIndex>(g)).second)
                throw DataError("duplicate object id '" + object_ids_[g] + "'");
        std::unordered_set<std::string> seen;
        for (const auto& a : attribute_names_)
            if (!seen.insert(a).second) throw DataError("duplicate attribute name '" + a + "'");

        ranges_.assign(m, {});
        for (std::size_t i = 0; i < m; ++i) {
            auto& w = ranges_[i];
            for (std::size_t g = 0; g < n; ++g) w.push_back(values_[g * m + i]);
            std::sort(w.begin(), w.end());
            w.erase(std::unique(w.begin(), w.end()), w.end());
        }
        ranks_.resize(n * m);
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t i = 0; i < m; ++i)
                ranks_[g * m + i] = *rank_of(i, values_[g * m + i]);
    }

    std::vector<std::string> object_ids_;
    std::vector<std::string> attribute_names_;
    std::vector<int> scales_;
    std::vector<Value> values_; // row-major
    std::vector<Rank> ranks_;   // row-major
    std::vector<std::vector<Value>> ranges_;
    std::unordered_map<std::string, ObjectIndex> object_index_;
};

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        std::string_view cell = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
        if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') cell = cell.substr(1, cell.size() - 2);
        cells.emplace_back(cell);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

} // namespace detail

/// Reads a comma-separated table with a mandatory header row. A first column named
/// "id" supplies object identifiers; otherwise objects are named g1, g2, ...
inline NumericalDataset parse_csv(std::istream& in, std::string_view source = "<input>") {
    const std::string where(source);
    std::string line;
    std::vector<std::string> header;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::trim(line).empty()) {
            header = detail::split_csv_line(line);
            break;
        }
    }
    if (header.empty()) throw DataError(where + ": empty table");
    if (line_no == 1 && header.front().rfind("\xEF\xBB\xBF", 0) == 0) header.front().erase(0, 3);

    const bool has_ids = header.front() == "id";
    std::vector<std::string> attrs(header.begin() + (has_ids ? 1 : 0), header.end());
    if (attrs.empty()) throw DataError(where + ": no attribute columns");
    for (std::size_t i = 0; i < attrs.size(); ++i)
        if (attrs[i].empty()) throw DataError(where + ": empty attribute name in column " + std::to_string(i + 1));

    std::vector<std::string> ids;
    std::vector<std::vector<Decimal>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        auto cells = detail::split_csv_line(line);
        if (cells.size() != header.size())
            throw DataError(where + ":" + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                            " cells, found " + std::to_string(cells.size()));
        std::size_t first = 0;
        if (has_ids) {
            if (cells.front().empty()) throw DataError(where + ":" + std::to_string(line_no) + ": empty object id");
            ids.push_back(cells.front());
            first = 1;
        } else {
            ids.push_back("g" + std::to_string(rows.size() + 1));
        }
        auto& row = rows.emplace_back();
        for (std::size_t c = first; c < cells.size(); ++c) {
            const auto& column = header[c];
            if (cells[c].empty())
                throw DataError(where + ":" + std::to_string(line_no) + ": missing value in column '" + column + "'");
            const auto d = parse_decimal(cells[c]);
            if (!d)
                throw DataError(where + ":" + std::to_string(line_no) + ": non-numeric cell '" + cells[c] +
                                "' in column '" + column + "'");
            row.push_back(*d);
        }
    }
    if (rows.empty()) throw DataError(where + ": empty table (header only)");
    try {
        return NumericalDataset(std::move(ids), std::move(attrs), rows);
    } catch (const DataError& e) {
        throw DataError(where + ": " + e.what());
    }
}

inline NumericalDataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return parse_csv(in, path);
}

} // namespace intpat
