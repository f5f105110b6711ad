#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "foulkes/partition.hpp"

namespace foulkes {

struct WeightResult {
    int w = 0;  ///< w_k(core)
    int n = 0;  ///< |core| + w * p
};

/// E_k(core): partitions with k odd parts reached by adding w_k(core) p-hooks.
struct CandidateSet {
    Partition gamma;
    int k = 0;
    int p = 0;
    int weight = 0;
    std::vector<Partition> members;  ///< descending lexicographic
};

/// Connected component of the dominance comparability graph on E_k.
struct DominanceComponent {
    std::vector<Partition> members;  ///< descending lexicographic
    std::vector<Partition> maxima;   ///< maximal elements, descending lexicographic

    bool ambiguous() const { return maxima.size() != 1; }
};

enum class ColumnStatus { exact, support_only };

struct DecompositionColumn {
    BlockLabel block;
    Partition label;
    /// Rows known to hold a 1. For exact columns every other block row is 0.
    std::vector<Partition> ones;
    /// Rows that may be nonzero (entries 0 or 1). Equal to `ones` when exact.
    std::vector<Partition> support;
    ColumnStatus status = ColumnStatus::exact;
};

struct HypothesisCheck {
    bool holds = true;
    int w_k = 0;
    std::optional<int> w_k_minus_p;  ///< present when k >= p
};

/// Calls `visit` on each partition with the given p-core and weight; stops
/// early when `visit` returns false. Enumerates p-quotients: every p-tuple of
/// partitions of total size w, applied as bead slides on the core's abacus.
/// Throws std::invalid_argument if `gamma` is not a p-core.
void for_each_with_core_and_weight(const Partition& gamma, int p, int w,
                                   const std::function<bool(const Partition&)>& visit);

/// Materialized, descending lexicographic.
std::vector<Partition> partitions_with_core_and_weight(const Partition& gamma, int p, int w);

/// Default search cap 4 * (|gamma| + k + p).
int default_weight_cap(const Partition& gamma, int k, int p);

/// Minimal number of added p-hooks giving exactly k odd parts. Throws
/// SearchCapExceeded if no weight up to `cap` works.
WeightResult weight_k(const Partition& gamma, int k, int p, std::optional<int> cap = std::nullopt);

CandidateSet candidate_set(const Partition& gamma, int k, int p, std::optional<int> cap = std::nullopt);

/// True when k < p, otherwise w_{k-p} != w_k - 1.
HypothesisCheck hypothesis_holds(const Partition& gamma, int k, int p,
                                 std::optional<int> cap = std::nullopt);

std::vector<DominanceComponent> dominance_components(const std::vector<Partition>& members);
inline std::vector<DominanceComponent> dominance_components(const CandidateSet& e) {
    return dominance_components(e.members);
}

/// Decomposition-matrix columns guaranteed for (gamma, k, p). Throws
/// HypothesisViolation when the hypothesis fails. Components with a unique
/// maximal element give exact columns; otherwise one support-only column per
/// maximal element.
std::vector<DecompositionColumn> synthesize_columns(const Partition& gamma, int k, int p,
                                                    std::optional<int> cap = std::nullopt);

struct SweepCell {
    int p = 0;
    int e = 0;
    int k = 0;
    Partition core;
    int w = 0;
    int expected_w = 0;
    int size = 0;
    int expected_size = 0;
    bool pass() const { return w == expected_w && size == expected_size; }
};

/// For each e <= e_max and 0 <= k <= e + 1, compares w_k and |E_k| of
/// bound_family_core(p, e) with e + 1 - k and e + 2 - k. Cells run in parallel and
/// are returned ordered by (e, k).
std::vector<SweepCell> bound_family_sweep(int p, int e_max);

/// p-cores of size at most max_size, by size and then descending lexicographic.
std::vector<Partition> cores_up_to(int p, int max_size);

/// Core used to attain the w + 1 bound in weight w with k odd parts:
/// bound_family_core(p, w + k - 1), or (2) when w == k == 0 (taken with p-core
/// (2) itself, so the block has weight 0).
Partition bound_attaining_core(int p, int w, int k);

}  // namespace foulkes
