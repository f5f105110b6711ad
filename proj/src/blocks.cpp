#include "foulkes/blocks.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>

#include "foulkes/abacus.hpp"
#include "foulkes/errors.hpp"

namespace foulkes {

namespace {

/// Enumerates p-tuples of partitions with total size w, one runner at a time.
class QuotientWalker {
public:
    QuotientWalker(int p, int w, const std::vector<int>& runner_beads,
                   const std::function<bool(const Partition&)>& visit)
        : p_(p), runner_beads_(runner_beads), visit_(visit), chosen_(static_cast<std::size_t>(p)) {
        for (int s = 0; s <= w; ++s) by_size_.push_back(all_partitions(s));
        remaining_ = w;
    }

    bool run() { return place(0); }

private:
    bool place(int runner) {
        if (runner == p_ - 1) {
            for (const auto& q : by_size_[static_cast<std::size_t>(remaining_)]) {
                if (q.length() > runner_beads_[static_cast<std::size_t>(runner)]) continue;
                chosen_[static_cast<std::size_t>(runner)] = &q;
                if (!emit()) return false;
            }
            return true;
        }
        const int budget = remaining_;
        for (int s = budget; s >= 0; --s) {
            for (const auto& q : by_size_[static_cast<std::size_t>(s)]) {
                if (q.length() > runner_beads_[static_cast<std::size_t>(runner)]) continue;
                chosen_[static_cast<std::size_t>(runner)] = &q;
                remaining_ = budget - s;
                const bool go_on = place(runner + 1);
                remaining_ = budget;
                if (!go_on) return false;
            }
        }
        return true;
    }

    bool emit() {
        std::vector<int> beads;
        for (int r = 0; r < p_; ++r) {
            const int b = runner_beads_[static_cast<std::size_t>(r)];
            const Partition& q = *chosen_[static_cast<std::size_t>(r)];
            // The j-th lowest bead (j = 1..b) slides down q_j rows.
            for (int j = 1; j <= b; ++j) {
                const int row = (b - j) + q.part(j - 1);
                beads.push_back(row * p_ + r);
            }
        }
        return visit_(from_beta_set(std::move(beads)));
    }

    int p_;
    const std::vector<int>& runner_beads_;
    const std::function<bool(const Partition&)>& visit_;
    std::vector<std::vector<Partition>> by_size_;
    std::vector<const Partition*> chosen_;
    int remaining_ = 0;
};

std::string core_text(const Partition& gamma, int p) {
    return "(" + to_display_string(gamma) + ") for p = " + std::to_string(p);
}

}  // namespace

void for_each_with_core_and_weight(const Partition& gamma, int p, int w,
                                   const std::function<bool(const Partition&)>& visit) {
    require_odd_prime(p);
    if (w < 0) throw std::invalid_argument("weight must be nonnegative");
    if (!is_p_core(gamma, p)) {
        throw std::invalid_argument("not a p-core: " + core_text(gamma, p));
    }
    // Shifting by w full rows guarantees every runner carries >= w beads.
    const int nbeads = (gamma.length() + p - 1) / p * p + w * p;
    const Abacus abacus = Abacus::from_partition(gamma, p, nbeads);
    std::vector<int> runner_beads(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r) runner_beads[static_cast<std::size_t>(r)] = abacus.runner_count(r);
    QuotientWalker(p, w, runner_beads, visit).run();
}

std::vector<Partition> partitions_with_core_and_weight(const Partition& gamma, int p, int w) {
    std::vector<Partition> out;
    for_each_with_core_and_weight(gamma, p, w, [&](const Partition& lambda) {
        out.push_back(lambda);
        return true;
    });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int default_weight_cap(const Partition& gamma, int k, int p) { return 4 * (gamma.size() + k + p); }

WeightResult weight_k(const Partition& gamma, int k, int p, std::optional<int> cap) {
    require_odd_prime(p);
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const int limit = cap.value_or(default_weight_cap(gamma, k, p));
    for (int w = 0; w <= limit; ++w) {
        const int n = gamma.size() + w * p;
        // A partition with k odd parts has size congruent to k mod 2.
        if ((n - k) % 2 != 0 || n < k) continue;
        bool found = false;
        for_each_with_core_and_weight(gamma, p, w, [&](const Partition& lambda) {
            found = odd_parts_count(lambda) == k;
            return !found;
        });
        if (found) return {w, n};
    }
    throw SearchCapExceeded("no weight <= " + std::to_string(limit) + " gives " + std::to_string(k) +
                            " odd parts for core " + core_text(gamma, p));
}

CandidateSet candidate_set(const Partition& gamma, int k, int p, std::optional<int> cap) {
    const WeightResult wr = weight_k(gamma, k, p, cap);
    CandidateSet out{gamma, k, p, wr.w, {}};
    for_each_with_core_and_weight(gamma, p, wr.w, [&](const Partition& lambda) {
        if (odd_parts_count(lambda) == k) out.members.push_back(lambda);
        return true;
    });
    std::sort(out.members.begin(), out.members.end(), std::greater<>());
    return out;
}

HypothesisCheck hypothesis_holds(const Partition& gamma, int k, int p, std::optional<int> cap) {
    HypothesisCheck out;
    out.w_k = weight_k(gamma, k, p, cap).w;
    if (k < p) return out;
    out.w_k_minus_p = weight_k(gamma, k - p, p, cap).w;
    out.holds = *out.w_k_minus_p != out.w_k - 1;
    return out;
}

std::vector<DominanceComponent> dominance_components(const std::vector<Partition>& input) {
    std::vector<Partition> members = input;
    std::sort(members.begin(), members.end(), std::greater<>());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const std::size_t n = members.size();

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> dominated(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool ij = dominates(members[i], members[j]);
            const bool ji = dominates(members[j], members[i]);
            if (ij) dominated[j] = true;
            if (ji) dominated[i] = true;
            if (ij || ji) parent[find(i)] = find(j);
        }
    }

    std::vector<DominanceComponent> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (slot[root] == n) {
            slot[root] = out.size();
            out.emplace_back();
        }
        auto& comp = out[slot[root]];
        comp.members.push_back(members[i]);
        if (!dominated[i]) comp.maxima.push_back(members[i]);
    }
    return out;
}

std::vector<DecompositionColumn> synthesize_columns(const Partition& gamma, int k, int p,
                                                    std::optional<int> cap) {
    const HypothesisCheck check = hypothesis_holds(gamma, k, p, cap);
    if (!check.holds) {
        const std::string shown = gamma.empty() ? "()" : "(" + to_display_string(gamma) + ")";
        const std::string where = shown + ", p = " + std::to_string(p) + ", k = " + std::to_string(k);
        throw HypothesisViolation("w_{k-p} equals w_k - 1 for core " + where,
                                  check.w_k, check.w_k_minus_p.value_or(-1));
    }
    const CandidateSet e = candidate_set(gamma, k, p, cap);
    const BlockLabel block{p, gamma, e.weight};

    std::vector<DecompositionColumn> out;
    for (const auto& comp : dominance_components(e)) {
        if (!comp.ambiguous()) {
            const Partition& label = comp.maxima.front();
            if (!is_p_regular(label, p)) {
                throw std::logic_error("maximal element " + to_display_string(label) + " is not p-regular");
            }
            out.push_back({block, label, comp.members, comp.members, ColumnStatus::exact});
            continue;
        }
        for (const auto& label : comp.maxima) {
            if (!is_p_regular(label, p)) {
                throw std::logic_error("maximal element " + to_display_string(label) + " is not p-regular");
            }
            std::vector<Partition> support;
            for (const auto& mu : comp.members) {
                if (dominates(label, mu)) support.push_back(mu);
            }
            out.push_back({block, label, {label}, std::move(support), ColumnStatus::support_only});
        }
    }
    return out;
}

std::vector<SweepCell> bound_family_sweep(int p, int e_max) {
    require_odd_prime(p);
    std::vector<SweepCell> cells;
    for (int e = 0; e <= e_max; ++e) {
        for (int k = 0; k <= e + 1; ++k) {
            SweepCell c;
            c.p = p;
            c.e = e;
            c.k = k;
            c.core = bound_family_core(p, e);
            c.expected_w = e + 1 - k;
            c.expected_size = e + 2 - k;
            cells.push_back(std::move(c));
        }
    }
    const auto count = static_cast<long>(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        auto& c = cells[static_cast<std::size_t>(i)];
        try {
            const CandidateSet set = candidate_set(c.core, c.k, p);
            c.w = set.weight;
            c.size = static_cast<int>(set.members.size());
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    return cells;
}

std::vector<Partition> cores_up_to(int p, int max_size) {
    require_odd_prime(p);
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        for (auto& lambda : partitions_of(n)) {
            if (is_p_core(lambda, p)) out.push_back(lambda);
        }
    }
    return out;
}

Partition bound_attaining_core(int p, int w, int k) {
    if (w < 0 || k < 0) throw std::invalid_argument("w and k must be nonnegative");
    if (w == 0 && k == 0) return Partition({2});
    return bound_family_core(p, w + k - 1);
}

}  // namespace foulkes
