#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foulkes/blocks.hpp"
#include "foulkes/module.hpp"
#include "foulkes/partition.hpp"

namespace foulkes {

/// d_{mu nu} for the p-regular nu of mu's block; zero entries are omitted.
struct DecompositionRow {
    Partition mu;
    std::map<Partition, int, std::greater<>> multiplicities;

    int at(const Partition& nu) const {
        auto it = multiplicities.find(nu);
        return it == multiplicities.end() ? 0 : it->second;
    }
    friend bool operator==(const DecompositionRow&, const DecompositionRow&) = default;
};

/// Rows keyed by (p, mu) stored as one JSON file each.
class RowCache {
public:
    explicit RowCache(std::filesystem::path dir);

    /// $FOULKES_CACHE_DIR, else $XDG_CACHE_HOME/foulkes, else ~/.cache/foulkes.
    static std::filesystem::path default_dir();

    std::optional<DecompositionRow> load(int p, const Partition& mu) const;
    void store(int p, const DecompositionRow& row) const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path file_for(int p, const Partition& mu) const;
    std::filesystem::path dir_;
};

struct OracleOptions {
    std::uint64_t seed = 7;
    int cap = 10;
    MeataxeOptions meataxe;  ///< seed is overridden per row
    const RowCache* cache = nullptr;
};

/// D^nu for every p-regular nu with the given core and weight, descending
/// lexicographic.
struct SimpleLibrary {
    BlockLabel block;
    std::vector<Partition> labels;
    std::vector<FpModule> modules;
};

SimpleLibrary block_library(const BlockLabel& block, int cap = 10);

/// Seed for one row: mixes the run seed with mu so serial and parallel runs agree.
std::uint64_t row_seed(std::uint64_t seed, const Partition& mu);

/// Composition multiplicities of D^nu in S^mu, restricted to mu's block.
DecompositionRow decomposition_row(const Partition& mu, const SimpleLibrary& library, const OracleOptions& options);

/// Every row of the block, in parallel over mu, descending lexicographic.
std::vector<DecompositionRow> block_rows(const BlockLabel& block, const OracleOptions& options);

/// d_{mu mu} = 1 for p-regular mu, and d_{mu nu} != 0 only when nu dominates mu.
bool is_unitriangular(const DecompositionRow& row, int p);

struct RowMismatch {
    Partition mu;
    int expected = 0;  ///< -1 for "0 or 1" on support-only columns
    int found = 0;
};

struct VerifyReport {
    DecompositionColumn column;
    int checked_rows = 0;
    std::vector<RowMismatch> mismatches;
    bool unitriangular = true;
    std::vector<DecompositionRow> rows;

    bool ok() const { return mismatches.empty() && unitriangular; }
};

/// Compares the column against d_{mu,label} for all mu in the block. Exact
/// columns need 1 on `ones` and 0 elsewhere; support-only columns need
/// entries in {0,1}, zero off the support, and 1 at the label.
VerifyReport verify_column(const DecompositionColumn& column, const OracleOptions& options);

/// verify_column with precomputed rows of the column's block.
VerifyReport verify_column(const DecompositionColumn& column, const std::vector<DecompositionRow>& rows, int p);

struct SweepCase {
    Partition core;
    int k = 0;
    int n = 0;
    bool hypothesis = true;
    std::vector<VerifyReport> reports;  ///< one per synthesized column

    bool ok() const;
};

/// Every p-core of size <= max_core and k in `ks` whose block degree
/// |core| + w_k p is at most nmax, with columns checked against the oracle.
/// Cases failing the hypothesis are listed without reports. Rows of each
/// block are computed once.
std::vector<SweepCase> oracle_sweep(int p, int max_core, const std::vector<int>& ks, int nmax,
                                    const OracleOptions& options);

}  // namespace foulkes
