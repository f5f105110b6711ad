#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "foulkes/fp_matrix.hpp"
#include "foulkes/module.hpp"
#include "foulkes/monomial.hpp"
#include "foulkes/partition.hpp"

namespace oracle {

using foulkes::Partition;

/// Number of partitions of n by Euler's pentagonal recurrence.
inline std::uint64_t partition_count(int n) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        std::int64_t total = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > i) break;
            const int sign = (j % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(i - g1)];
            if (g2 <= i) total += sign * p[static_cast<std::size_t>(i - g2)];
        }
        p[static_cast<std::size_t>(i)] = total;
    }
    return static_cast<std::uint64_t>(p[static_cast<std::size_t>(n)]);
}

/// Number of standard tableaux by the hook length formula.
inline std::uint64_t hook_length_count(const Partition& lambda) {
    const Partition conj = foulkes::conjugate(lambda);
    // n! / prod hooks, accumulated as a prime-exponent vector to stay exact
    std::map<int, int> exps;
    auto add_factorization = [&](int x, int sign) {
        for (int q = 2; q * q <= x; ++q) {
            while (x % q == 0) {
                exps[q] += sign;
                x /= q;
            }
        }
        if (x > 1) exps[x] += sign;
    };
    for (int i = 2; i <= lambda.size(); ++i) add_factorization(i, 1);
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda.part(r); ++c) {
            add_factorization(lambda.part(r) - c + conj.part(c) - r - 1, -1);
        }
    }
    std::uint64_t out = 1;
    for (auto [q, e] : exps) {
        for (int i = 0; i < e; ++i) out *= static_cast<std::uint64_t>(q);
    }
    return out;
}

using Cells = std::set<std::pair<int, int>>;

inline Cells cells_of(const Partition& lambda) {
    Cells out;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda.part(r); ++c) out.emplace(r, c);
    }
    return out;
}

/// big / small is a connected skew shape with no 2x2 square.
inline bool is_rim_hook(const Partition& big, const Partition& small) {
    const Cells b = cells_of(big);
    const Cells s = cells_of(small);
    if (!std::includes(b.begin(), b.end(), s.begin(), s.end())) return false;
    Cells skew;
    std::set_difference(b.begin(), b.end(), s.begin(), s.end(), std::inserter(skew, skew.end()));
    if (skew.empty()) return false;
    for (auto [r, c] : skew) {
        if (skew.contains({r + 1, c}) && skew.contains({r, c + 1}) && skew.contains({r + 1, c + 1})) return false;
    }
    Cells seen;
    std::vector<std::pair<int, int>> stack{*skew.begin()};
    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        if (!skew.contains({r, c}) || !seen.insert({r, c}).second) continue;
        stack.push_back({r + 1, c});
        stack.push_back({r - 1, c});
        stack.push_back({r, c + 1});
        stack.push_back({r, c - 1});
    }
    return seen.size() == skew.size();
}

/// All mu of |lambda| + p containing lambda with mu / lambda a rim hook.
inline std::set<Partition> rim_hooks_added(const Partition& lambda, int p) {
    std::set<Partition> out;
    for (const auto& mu : foulkes::all_partitions(lambda.size() + p)) {
        if (is_rim_hook(mu, lambda)) out.insert(mu);
    }
    return out;
}

/// Removes rim p-hooks found by diagram search until none is left.
inline std::pair<Partition, int> core_by_cells(Partition lambda, int p) {
    int weight = 0;
    for (;;) {
        bool removed = false;
        if (lambda.size() >= p) {
            for (const auto& mu : foulkes::all_partitions(lambda.size() - p)) {
                if (is_rim_hook(lambda, mu)) {
                    lambda = mu;
                    ++weight;
                    removed = true;
                    break;
                }
            }
        }
        if (!removed) return {lambda, weight};
    }
}

/// Number of p-tuples of partitions of total size w.
inline std::uint64_t multipartition_count(int p, int w) {
    std::vector<std::uint64_t> total(static_cast<std::size_t>(w) + 1, 0);
    total[0] = 1;
    for (int runner = 0; runner < p; ++runner) {
        std::vector<std::uint64_t> next(total.size(), 0);
        for (int a = 0; a <= w; ++a) {
            for (int b = 0; a + b <= w; ++b) {
                next[static_cast<std::size_t>(a + b)] += total[static_cast<std::size_t>(a)] * partition_count(b);
            }
        }
        total = std::move(next);
    }
    return total[static_cast<std::size_t>(w)];
}

/// dim Hom by solving A_i X = X B_i for all i directly in dA * dB unknowns.
inline int naive_hom_dimension(const foulkes::FpModule& a, const foulkes::FpModule& b) {
    using foulkes::fp::FpMatrix;
    const int da = a.dim;
    const int db = b.dim;
    const int unknowns = da * db;
    FpMatrix system(a.p, 0, unknowns);
    for (std::size_t g = 0; g < a.actions.size(); ++g) {
        const FpMatrix& A = a.actions[g];
        const FpMatrix& B = b.actions[g];
        // entry (i, j) of A X - X B
        for (int i = 0; i < da; ++i) {
            for (int j = 0; j < db; ++j) {
                std::vector<long long> eq(static_cast<std::size_t>(unknowns), 0);
                for (int l = 0; l < da; ++l) eq[static_cast<std::size_t>(l * db + j)] += A(i, l);
                for (int l = 0; l < db; ++l) eq[static_cast<std::size_t>(i * db + l)] -= B(l, j);
                std::vector<foulkes::fp::Residue> row;
                for (auto x : eq) row.push_back(foulkes::fp::reduce(x, a.p));
                system.append_row(row);
            }
        }
    }
    return unknowns - foulkes::fp::rank(system);
}

/// Fixed points via conjugation: g^-1 I(omega) g = I(omega).
inline std::vector<foulkes::OmegaElement> fixed_by_conjugation(int m, int k,
                                                               const std::vector<foulkes::Permutation>& gens) {
    std::vector<foulkes::OmegaElement> out;
    const int n = 2 * m + k;
    for (const auto& w : foulkes::enumerate_omega(m, k)) {
        const auto inv = w.involution().extended(n);
        bool fixed = true;
        for (const auto& g : gens) {
            const auto ge = g.extended(std::max(n, g.degree()));
            if (!(ge.inverse() * inv * ge == inv.extended(ge.degree()))) fixed = false;
        }
        if (fixed) out.push_back(w);
    }
    return out;
}

/// Random matrix with entries in [0, p).
inline foulkes::fp::FpMatrix random_matrix(int p, int rows, int cols, std::mt19937_64& rng, int zero_percent = 0) {
    foulkes::fp::FpMatrix m(p, rows, cols);
    std::uniform_int_distribution<int> entry(0, p - 1);
    std::uniform_int_distribution<int> pct(0, 99);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m.set(r, c, pct(rng) < zero_percent ? 0 : entry(rng));
    }
    return m;
}

/// Random partition of a random size in [0, max_size].
inline Partition random_partition(std::mt19937_64& rng, int max_size) {
    std::uniform_int_distribution<int> size(0, max_size);
    int n = size(rng);
    std::vector<int> parts;
    while (n > 0) {
        std::uniform_int_distribution<int> part(1, n);
        const int x = part(rng);
        parts.push_back(x);
        n -= x;
    }
    return Partition::from_unsorted(std::move(parts));
}

}  // namespace oracle
