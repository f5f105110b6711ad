#include "foulkes/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "foulkes/specht.hpp"

namespace foulkes {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

template <class Body>
void parallel_over(long count, Body&& body) {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

RowCache::RowCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path RowCache::default_dir() {
    if (const char* env = std::getenv("FOULKES_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "foulkes";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "foulkes";
    return std::filesystem::temp_directory_path() / "foulkes";
}

std::filesystem::path RowCache::file_for(int p, const Partition& mu) const {
    std::string name = "row_p" + std::to_string(p) + "_";
    name += mu.empty() ? "empty" : to_string(mu);
    std::replace(name.begin(), name.end(), ',', '-');
    return dir_ / (name + ".json");
}

std::optional<DecompositionRow> RowCache::load(int p, const Partition& mu) const {
    std::ifstream in(file_for(p, mu));
    if (!in) return std::nullopt;
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.at("v").get<int>() != 1 || j.at("p").get<int>() != p || parse_partition(j.at("mu").get<std::string>()) != mu) {
            return std::nullopt;
        }
        DecompositionRow row{mu, {}};
        for (const auto& [label, mult] : j.at("multiplicities").items()) {
            row.multiplicities.emplace(parse_partition(label), mult.get<int>());
        }
        return row;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void RowCache::store(int p, const DecompositionRow& row) const {
    nlohmann::json j;
    j["v"] = 1;
    j["p"] = p;
    j["mu"] = to_string(row.mu);
    j["multiplicities"] = nlohmann::json::object();
    for (const auto& [nu, d] : row.multiplicities) j["multiplicities"][to_string(nu)] = d;
    std::filesystem::create_directories(dir_);
    const auto target = file_for(p, row.mu);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, target);
}

SimpleLibrary block_library(const BlockLabel& block, int cap) {
    SimpleLibrary lib{block, {}, {}};
    for (const auto& nu : partitions_with_core_and_weight(block.core, block.p, block.weight)) {
        if (is_p_regular(nu, block.p)) lib.labels.push_back(nu);
    }
    lib.modules.resize(lib.labels.size());
    parallel_over(static_cast<long>(lib.labels.size()),
                  [&](std::size_t i) { lib.modules[i] = simple_head(lib.labels[i], block.p, cap); });
    return lib;
}

std::uint64_t row_seed(std::uint64_t seed, const Partition& mu) {
    std::uint64_t h = splitmix(seed);
    for (int part : mu.parts()) h = splitmix(h ^ static_cast<std::uint64_t>(part));
    return h;
}

DecompositionRow decomposition_row(const Partition& mu, const SimpleLibrary& library, const OracleOptions& options) {
    const int p = library.block.p;
    if (p_core(mu, p) != CoreAndWeight{library.block.core, library.block.weight}) {
        throw std::invalid_argument(to_display_string(mu) + " is not in the library's block");
    }
    if (options.cache) {
        if (auto cached = options.cache->load(p, mu)) return *cached;
    }
    const SpechtModule s = specht_module(mu, p, options.cap);
    MeataxeOptions mx = options.meataxe;
    mx.seed = row_seed(options.seed, mu);
    const std::vector<int> counts = composition_factors(s.module, library.modules, mx);
    DecompositionRow row{mu, {}};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) row.multiplicities.emplace(library.labels[i], counts[i]);
    }
    if (options.cache) options.cache->store(p, row);
    return row;
}

std::vector<DecompositionRow> block_rows(const BlockLabel& block, const OracleOptions& options) {
    const SimpleLibrary library = block_library(block, options.cap);
    const auto members = partitions_with_core_and_weight(block.core, block.p, block.weight);
    std::vector<DecompositionRow> rows(members.size());
    parallel_over(static_cast<long>(members.size()),
                  [&](std::size_t i) { rows[i] = decomposition_row(members[i], library, options); });
    return rows;
}

bool is_unitriangular(const DecompositionRow& row, int p) {
    if (is_p_regular(row.mu, p) && row.at(row.mu) != 1) return false;
    for (const auto& [nu, d] : row.multiplicities) {
        if (d != 0 && !dominates(nu, row.mu)) return false;
    }
    return true;
}

VerifyReport verify_column(const DecompositionColumn& column, const std::vector<DecompositionRow>& rows, int p) {
    VerifyReport report{column, 0, {}, true, rows};
    auto contains = [](const std::vector<Partition>& set, const Partition& x) {
        return std::find(set.begin(), set.end(), x) != set.end();
    };
    for (const auto& row : rows) {
        ++report.checked_rows;
        if (!is_unitriangular(row, p)) report.unitriangular = false;
        const int d = row.at(column.label);
        if (column.status == ColumnStatus::exact) {
            const int expected = contains(column.ones, row.mu) ? 1 : 0;
            if (d != expected) report.mismatches.push_back({row.mu, expected, d});
        } else if (row.mu == column.label) {
            if (d != 1) report.mismatches.push_back({row.mu, 1, d});
        } else if (!contains(column.support, row.mu)) {
            if (d != 0) report.mismatches.push_back({row.mu, 0, d});
        } else if (d != 0 && d != 1) {
            report.mismatches.push_back({row.mu, -1, d});
        }
    }
    return report;
}

VerifyReport verify_column(const DecompositionColumn& column, const OracleOptions& options) {
    const auto rows = block_rows(column.block, options);
    return verify_column(column, rows, column.block.p);
}

bool SweepCase::ok() const {
    return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
}

std::vector<SweepCase> oracle_sweep(int p, int max_core, const std::vector<int>& ks, int nmax,
                                    const OracleOptions& options) {
    std::vector<SweepCase> cases;
    for (const auto& core : cores_up_to(p, max_core)) {
        for (int k : ks) {
            const WeightResult wr = weight_k(core, k, p);
            if (wr.n > nmax) continue;
            SweepCase c{core, k, wr.n, hypothesis_holds(core, k, p).holds, {}};
            cases.push_back(std::move(c));
        }
    }
    std::map<std::pair<Partition, int>, std::vector<DecompositionRow>> rows_by_block;
    for (auto& c : cases) {
        if (!c.hypothesis) continue;
        for (const auto& column : synthesize_columns(c.core, c.k, p)) {
            const auto key = std::make_pair(column.block.core, column.block.weight);
            auto it = rows_by_block.find(key);
            if (it == rows_by_block.end()) it = rows_by_block.emplace(key, block_rows(column.block, options)).first;
            c.reports.push_back(verify_column(column, it->second, p));
        }
    }
    return cases;
}

}  // namespace foulkes
