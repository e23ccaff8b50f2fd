#pragma once

// Command-line front end: mine, scale, oracle, bench, stats, redundancy.
// Exit codes: 0 ok, 1 oracle mismatch in bench --check-oracle, 2 usage, 3 data error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "intpat/intpat.hpp"
#include "intpat/io.hpp"

namespace intpat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

/// Bad flag values detected after parsing.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Minimum support given as an absolute count ("3") or a percentage of |G| ("60%").
/// Percentages round up.
inline std::size_t resolve_min_support(const std::string& text, std::size_t num_objects) {
    std::string s(intpat::detail::trim(text));
    const bool percent = !s.empty() && s.back() == '%';
    if (percent) s.pop_back();
    const auto d = parse_decimal(s);
    if (!d) throw UsageError("invalid --min-support '" + text + "'");
    if (d->mantissa <= 0) throw UsageError("--min-support must be >= 1 (got '" + text + "')");

    // value = num / den exactly; a percentage is scaled by |G| / 100.
    BigInt num = d->mantissa;
    BigInt den = 1;
    for (int e = d->exponent; e > 0; --e) num *= 10;
    for (int e = d->exponent; e < 0; ++e) den *= 10;
    if (percent) {
        if (num > 100 * den) throw UsageError("--min-support percentage above 100%: '" + text + "'");
        num *= num_objects;
        den *= 100;
    } else if (num % den != 0) {
        throw UsageError("absolute --min-support must be an integer: '" + text + "'");
    }
    const BigInt count = (num + den - 1) / den;
    if (count < 1 || count > BigInt(num_objects))
        throw UsageError("--min-support '" + text + "' resolves to " + count.str() + ", outside [1, " +
                         std::to_string(num_objects) + "]");
    return count.convert_to<std::size_t>();
}

namespace detail {

struct Output {
    std::ofstream file;
    std::ostream* stream;

    Output(const std::string& path, std::ostream& fallback) : stream(&fallback) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw DataError("cannot write '" + path + "'");
            stream = &file;
        }
    }
    std::ostream& operator*() { return *stream; }
};

inline NumericalDataset load_input(const std::string& path, const std::string& attributes) {
    NumericalDataset ds = load_csv(path);
    if (attributes.empty()) return ds;
    std::vector<std::size_t> idx;
    std::stringstream ss(attributes);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto i = ds.find_attribute(std::string(intpat::detail::trim(name)));
        if (!i) throw UsageError("unknown attribute '" + name + "' in --attributes");
        idx.push_back(*i);
    }
    return ds.project(idx);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto t = intpat::detail::trim(item);
        if (!t.empty()) out.emplace_back(t);
    }
    return out;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline std::string scientific(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

inline double ratio(std::size_t count, const BigInt& total) {
    return static_cast<double>(count) / total.convert_to<double>();
}

inline StoreKind parse_store(const std::string& s) {
    if (s == "trie") return StoreKind::Trie;
    if (s == "hash") return StoreKind::Hash;
    throw UsageError("unknown store '" + s + "' (expected trie or hash)");
}

template <class Record>
void sort_records(std::vector<Record>& records) {
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.pattern < b.pattern; });
}

inline Json run_report(const std::string& path, const NumericalDataset& ds, const std::string& mode,
                       std::size_t minsup, const std::string& store, std::size_t count, double ms,
                       std::size_t depth) {
    Json r;
    r["dataset"] = path;
    r["objects"] = ds.num_objects();
    r["attributes"] = ds.num_attributes();
    Json ranges = Json::array();
    for (std::size_t i = 0; i < ds.num_attributes(); ++i) ranges.push_back(ds.range(i).size());
    r["range_sizes"] = std::move(ranges);
    r["mode"] = mode;
    r["min_support"] = minsup;
    r["min_support_percent"] = 100.0 * static_cast<double>(minsup) / static_cast<double>(ds.num_objects());
    r["store"] = store.empty() ? Json(nullptr) : Json(store);
    r["patterns"] = count;
    r["elapsed_ms"] = ms;
    r["max_depth"] = depth;
    return r;
}

} // namespace detail

struct MineOptions {
    std::string input;
    std::string attributes;
    std::string min_support = "1";
    std::string mode = "closed";
    std::string store = "trie";
    std::string output;
    std::string report;
    bool sort = false;
    bool parallel = false;
};

inline int cmd_mine(const MineOptions& o, std::ostream& out, std::ostream& err) {
    const auto ds = detail::load_input(o.input, o.attributes);
    MinerConfig cfg{resolve_min_support(o.min_support, ds.num_objects()), o.parallel};
    const StoreKind kind = detail::parse_store(o.store);
    detail::Output sink(o.output, out);
    const auto start = std::chrono::steady_clock::now();
    std::size_t count = 0;
    MinerStats stats;
    std::string store_name;
    if (o.mode == "closed") {
        auto records = mine_fcip(ds, cfg, &stats);
        if (o.sort) detail::sort_records(records);
        for (const auto& r : records) *sink << record_to_json(r, ds).dump() << '\n';
        count = records.size();
    } else if (o.mode == "generators") {
        store_name = std::string(to_string(kind));
        auto records = mine_fipg(ds, cfg, kind, &stats);
        if (o.sort) detail::sort_records(records);
        for (const auto& r : records) {
            Json j = record_to_json(r.pattern, r.extent, ds);
            j["closure"] = pattern_to_json(r.closure, ds);
            *sink << j.dump() << '\n';
        }
        count = records.size();
    } else {
        throw UsageError("unknown --mode '" + o.mode + "' (expected closed or generators)");
    }
    sink.stream->flush();
    const Json report =
        detail::run_report(o.input, ds, o.mode, cfg.minsup, store_name, count, detail::elapsed_ms(start), stats.max_depth);
    detail::Output rep(o.report, err);
    *rep << report.dump() << '\n';
    return kExitOk;
}

struct ScaleOptions {
    std::string input;
    std::string output;
    std::string format = "csv";
};

inline int cmd_scale(const ScaleOptions& o, std::ostream& out, std::ostream&) {
    const auto ds = load_csv(o.input);
    const auto ctx = interordinal_scale(ds);
    detail::Output sink(o.output, out);
    if (o.format == "csv")
        write_context_csv(*sink, ctx);
    else if (o.format == "json")
        *sink << context_to_json(ctx).dump() << '\n';
    else
        throw UsageError("unknown --format '" + o.format + "' (expected csv or json)");
    return kExitOk;
}

struct OracleOptions {
    std::string input;
    std::string attributes;
    std::string min_support = "1";
    std::string emit = "closed";
    std::string output;
    std::optional<std::uint64_t> cap;
};

inline int cmd_oracle(const OracleOptions& o, std::ostream& out, std::ostream&) {
    const auto ds = detail::load_input(o.input, o.attributes);
    const std::size_t minsup = resolve_min_support(o.min_support, ds.num_objects());
    const std::uint64_t cap = o.cap ? *o.cap : oracle_cap_from_env();
    if (o.emit != "closed" && o.emit != "generators" && o.emit != "classes")
        throw UsageError("unknown --emit '" + o.emit + "' (expected closed, generators or classes)");
    const auto part = classes(ds, minsup, cap);
    detail::Output sink(o.output, out);
    if (o.emit == "classes") {
        for (const auto& cls : part.classes) {
            Json j;
            j["extent"] = extent_to_json(cls.extent, ds);
            j["support"] = cls.extent.size();
            j["closed"] = pattern_to_json(cls.closed, ds);
            Json gens = Json::array();
            for (const auto& g : cls.generators) gens.push_back(pattern_to_json(g, ds));
            j["generators"] = std::move(gens);
            j["members"] = cls.members.size();
            *sink << j.dump() << '\n';
        }
        return kExitOk;
    }
    std::vector<GeneratorRecord> records;
    for (const auto& cls : part.classes) {
        if (o.emit == "closed")
            records.push_back({cls.closed, cls.extent, cls.closed});
        else
            for (const auto& g : cls.generators) records.push_back({g, cls.extent, cls.closed});
    }
    detail::sort_records(records);
    for (const auto& r : records) {
        Json j = record_to_json(r.pattern, r.extent, ds);
        if (o.emit == "generators") j["closure"] = pattern_to_json(r.closure, ds);
        *sink << j.dump() << '\n';
    }
    return kExitOk;
}

struct BenchOptions {
    std::string input;
    std::string attributes;
    std::string min_supports = "1";
    std::string modes = "closed,generators";
    std::string stores = "trie,hash";
    std::string csv;
    bool check_oracle = false;
};

struct BenchRow {
    std::string min_support;
    std::size_t minsup = 0;
    std::string mode;
    std::string store;
    std::size_t count = 0;
    double elapsed_ms = 0;
    std::optional<std::size_t> oracle;
};

inline int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream&) {
    const auto ds = detail::load_input(o.input, o.attributes);
    const auto supports = detail::split_list(o.min_supports);
    const auto modes = detail::split_list(o.modes);
    const auto stores = detail::split_list(o.stores);
    if (supports.empty()) throw UsageError("--min-supports is empty");
    for (const auto& m : modes)
        if (m != "closed" && m != "generators") throw UsageError("unknown mode '" + m + "'");
    for (const auto& s : stores) (void)detail::parse_store(s);

    std::vector<BenchRow> rows;
    const PatternSpace space(ds);
    for (const auto& sup_text : supports) {
        const std::size_t minsup = resolve_min_support(sup_text, ds.num_objects());
        std::optional<ClassPartition> part;
        if (o.check_oracle) part = classes(ds, minsup, oracle_cap_from_env());
        for (const auto& mode : modes) {
            const auto oracle_count = [&]() -> std::optional<std::size_t> {
                if (!part) return std::nullopt;
                if (mode == "closed") return part->classes.size();
                std::size_t n = 0;
                for (const auto& c : part->classes) n += c.generators.size();
                return n;
            };
            if (mode == "closed") {
                const auto start = std::chrono::steady_clock::now();
                ClosedMiner miner(space, {minsup});
                std::size_t count = 0;
                miner.run([&](const RankPattern&, const Extent&) { ++count; });
                rows.push_back({sup_text, minsup, mode, "", count, detail::elapsed_ms(start), oracle_count()});
                continue;
            }
            for (const auto& store : stores) {
                const auto start = std::chrono::steady_clock::now();
                std::size_t count = 0;
                const auto counter = [&](const RankPattern&, const Extent&, const RankPattern&) { ++count; };
                if (detail::parse_store(store) == StoreKind::Trie) {
                    GeneratorMiner<TrieStore> miner(space, {minsup});
                    miner.run(counter);
                } else {
                    GeneratorMiner<HashStore> miner(space, {minsup});
                    miner.run(counter);
                }
                rows.push_back({sup_text, minsup, mode, store, count, detail::elapsed_ms(start), oracle_count()});
            }
        }
    }

    bool mismatch = false;
    std::ostringstream table;
    table << std::left << std::setw(12) << "min_support" << std::right << std::setw(8) << "abs" << "  " << std::left
          << std::setw(12) << "mode" << std::setw(6) << "store" << std::right << std::setw(12) << "count"
          << std::setw(12) << "elapsed_ms" << std::setw(12) << "per_closed";
    if (o.check_oracle) table << std::setw(10) << "oracle";
    table << '\n';
    for (const auto& r : rows) {
        std::string per_closed = "-";
        if (r.mode == "generators") {
            for (const auto& c : rows)
                if (c.mode == "closed" && c.minsup == r.minsup && c.count > 0) {
                    std::ostringstream os;
                    os << std::fixed << std::setprecision(2)
                       << static_cast<double>(r.count) / static_cast<double>(c.count);
                    per_closed = os.str();
                }
        }
        table << std::left << std::setw(12) << r.min_support << std::right << std::setw(8) << r.minsup << "  "
              << std::left << std::setw(12) << r.mode << std::setw(6) << (r.store.empty() ? "-" : r.store)
              << std::right << std::setw(12) << r.count << std::setw(12) << std::fixed << std::setprecision(1)
              << r.elapsed_ms << std::setw(12) << per_closed;
        if (r.oracle) {
            const bool ok = *r.oracle == r.count;
            mismatch |= !ok;
            table << std::setw(10) << (ok ? "ok" : "MISMATCH");
        }
        table << '\n';
    }
    out << table.str();

    if (!o.csv.empty()) {
        std::ofstream f(o.csv);
        if (!f) throw DataError("cannot write '" + o.csv + "'");
        f << "min_support,min_support_abs,mode,store,count,elapsed_ms";
        if (o.check_oracle) f << ",oracle_count";
        f << '\n';
        for (const auto& r : rows) {
            f << r.min_support << ',' << r.minsup << ',' << r.mode << ',' << r.store << ',' << r.count << ','
              << std::fixed << std::setprecision(3) << r.elapsed_ms;
            if (r.oracle) f << ',' << *r.oracle;
            f << '\n';
        }
    }
    return mismatch ? kExitMismatch : kExitOk;
}

struct StatsOptions {
    std::string input;
    std::string attributes;
    std::string min_support = "1";
    std::string store = "trie";
    bool json = false;
};

inline int cmd_stats(const StatsOptions& o, std::ostream& out, std::ostream&) {
    const auto ds = detail::load_input(o.input, o.attributes);
    const std::size_t minsup = resolve_min_support(o.min_support, ds.num_objects());
    const PatternSpace space(ds);
    std::size_t closed = 0;
    ClosedMiner cm(space, {minsup});
    cm.run([&](const RankPattern&, const Extent&) { ++closed; });
    std::size_t gens = 0;
    const auto count = [&](const RankPattern&, const Extent&, const RankPattern&) { ++gens; };
    if (detail::parse_store(o.store) == StoreKind::Trie) {
        GeneratorMiner<TrieStore> gm(space, {minsup});
        gm.run(count);
    } else {
        GeneratorMiner<HashStore> gm(space, {minsup});
        gm.run(count);
    }
    const BigInt total = search_space_size(ds);
    const std::string closed_ratio = detail::scientific(detail::ratio(closed, total));
    const std::string gen_ratio = detail::scientific(detail::ratio(gens, total));
    if (o.json) {
        Json j;
        j["dataset"] = o.input;
        j["min_support"] = minsup;
        j["search_space_size"] = total.str();
        j["fcip"] = closed;
        j["fipg"] = gens;
        j["fcip_ratio"] = closed_ratio;
        j["fipg_ratio"] = gen_ratio;
        out << j.dump() << '\n';
    } else {
        out << "dataset            " << o.input << '\n'
            << "min_support        " << minsup << '\n'
            << "search_space_size  " << total.str() << '\n'
            << "fcip               " << closed << '\n'
            << "fipg               " << gens << '\n'
            << "fcip_ratio         " << closed_ratio << '\n'
            << "fipg_ratio         " << gen_ratio << '\n';
    }
    return kExitOk;
}

struct RedundancyOptions {
    std::string input;
    std::size_t max_items = kDefaultPowersetItems;
    std::size_t witnesses = 10;
};

/// Local and global redundancy of the interordinally scaled context.
inline int cmd_redundancy(const RedundancyOptions& o, std::ostream& out, std::ostream&) {
    const auto ds = load_csv(o.input);
    const auto ctx = interordinal_scale(ds);
    const auto rep = count_nonredundant_correspondence(ctx, ds, o.max_items);
    const auto closed_items = mine_closed_itemsets(ctx, 1, std::max(o.max_items, kDefaultMinerItems));
    const auto is_gens = mine_is_generators(ctx, 1, std::max(o.max_items, kDefaultMinerItems));
    const auto fcip = mine_fcip(ds, {1});
    const auto fipg = mine_fipg(ds, {1}, StoreKind::Trie);
    const auto witnesses = global_redundancy_witnesses(ctx, ds, 1, std::max(o.max_items, kDefaultMinerItems));

    out << "items                               " << rep.num_items << '\n'
        << "itemsets (all, 2^items)             " << rep.all_itemsets.str() << '\n'
        << "itemsets with non-empty image       " << rep.with_image << '\n'
        << "  same, counting the empty itemset  " << rep.with_image_including_empty << '\n';
    for (std::size_t k = 0; k < rep.by_min_support.size(); ++k)
        out << "  non-empty itemsets, support >= " << std::left << std::setw(3) << (k + 1) << " "
            << rep.by_min_support[k] << '\n';
    out << "distinct interval patterns          " << rep.distinct_patterns << '\n'
        << "search space size                   " << rep.search_space.str() << '\n'
        << "closed IS-itemsets (minsup 1)       " << closed_items.size() << '\n'
        << "closed interval patterns (minsup 1) " << fcip.size() << '\n'
        << "IS-itemset generators (minsup 1)    " << is_gens.size() << '\n'
        << "interval pattern generators         " << fipg.size() << '\n'
        << "global redundancy witnesses         " << witnesses.size() << '\n';
    for (std::size_t k = 0; k < std::min(o.witnesses, witnesses.size()); ++k) {
        const auto& w = witnesses[k];
        Json j;
        j["subsumed_items"] = itemset_to_json(w.subsumed_items, ds);
        j["dominating_items"] = itemset_to_json(w.dominating_items, ds);
        j["subsumed"] = pattern_to_json(w.subsumed, ds);
        j["dominating"] = pattern_to_json(w.dominating, ds);
        j["extent"] = extent_to_json(w.extent, ds);
        out << j.dump() << '\n';
    }
    return kExitOk;
}

/// Parses and dispatches; every error becomes a message on `err` and an exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed interval patterns and generators from numerical data"};
    app.require_subcommand(1);

    MineOptions mine;
    auto* mine_cmd = app.add_subcommand("mine", "Mine frequent closed patterns or generators (JSONL)");
    mine_cmd->add_option("input", mine.input, "CSV dataset")->required();
    mine_cmd->add_option("--min-support,-s", mine.min_support, "Absolute count or percentage (e.g. 3 or 60%)");
    mine_cmd->add_option("--mode", mine.mode, "closed | generators");
    mine_cmd->add_option("--store", mine.store, "Generator store: trie | hash");
    mine_cmd->add_option("--output,-o", mine.output, "Output file (default stdout)");
    mine_cmd->add_option("--report", mine.report, "Run report file (default stderr)");
    mine_cmd->add_option("--attributes", mine.attributes, "Comma-separated attribute subset");
    mine_cmd->add_flag("--sort", mine.sort, "Sort records by pattern");
    mine_cmd->add_flag("--parallel", mine.parallel, "Closed mode: mine top-level branches concurrently");

    ScaleOptions scale;
    auto* scale_cmd = app.add_subcommand("scale", "Interordinal scaling to a binary context");
    scale_cmd->add_option("input", scale.input, "CSV dataset")->required();
    scale_cmd->add_option("--output,-o", scale.output, "Output file (default stdout)");
    scale_cmd->add_option("--format", scale.format, "csv | json");

    OracleOptions oracle;
    std::uint64_t cap = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force closed patterns, generators or classes");
    oracle_cmd->add_option("input", oracle.input, "CSV dataset")->required();
    oracle_cmd->add_option("--emit", oracle.emit, "closed | generators | classes");
    oracle_cmd->add_option("--min-support,-s", oracle.min_support, "Absolute count or percentage");
    oracle_cmd->add_option("--output,-o", oracle.output, "Output file (default stdout)");
    oracle_cmd->add_option("--attributes", oracle.attributes, "Comma-separated attribute subset");
    auto* cap_opt = oracle_cmd->add_option("--cap", cap, "Search-space cap (default $INTPAT_ORACLE_CAP or 1e7)");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Counts and timings per minimum support and mode");
    bench_cmd->add_option("input", bench.input, "CSV dataset")->required();
    bench_cmd->add_option("--min-supports", bench.min_supports, "Comma-separated list, e.g. 90%,50%,1");
    bench_cmd->add_option("--modes", bench.modes, "Comma-separated: closed,generators");
    bench_cmd->add_option("--stores", bench.stores, "Comma-separated: trie,hash");
    bench_cmd->add_option("--csv", bench.csv, "Also write rows as CSV");
    bench_cmd->add_option("--attributes", bench.attributes, "Comma-separated attribute subset");
    bench_cmd->add_flag("--check-oracle", bench.check_oracle, "Compare counts with the brute-force oracle");

    StatsOptions stats;
    auto* stats_cmd = app.add_subcommand("stats", "Pattern counts relative to the search space");
    stats_cmd->add_option("input", stats.input, "CSV dataset")->required();
    stats_cmd->add_option("--min-support,-s", stats.min_support, "Absolute count or percentage");
    stats_cmd->add_option("--store", stats.store, "Generator store: trie | hash");
    stats_cmd->add_option("--attributes", stats.attributes, "Comma-separated attribute subset");
    stats_cmd->add_flag("--json", stats.json, "JSON output");

    RedundancyOptions red;
    auto* red_cmd = app.add_subcommand("redundancy", "IS-itemset redundancy diagnostics");
    red_cmd->add_option("input", red.input, "CSV dataset")->required();
    red_cmd->add_option("--max-items", red.max_items, "Item guard for the powerset enumeration");
    red_cmd->add_option("--witnesses", red.witnesses, "Number of global-redundancy witnesses to print");

    std::vector<std::string> argv_storage{"intpat"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*mine_cmd) return cmd_mine(mine, out, err);
        if (*scale_cmd) return cmd_scale(scale, out, err);
        if (*oracle_cmd) {
            if (*cap_opt) oracle.cap = cap;
            return cmd_oracle(oracle, out, err);
        }
        if (*bench_cmd) return cmd_bench(bench, out, err);
        if (*stats_cmd) return cmd_stats(stats, out, err);
        if (*red_cmd) return cmd_redundancy(red, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

} // namespace intpat::cli
