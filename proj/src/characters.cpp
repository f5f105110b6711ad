#include "foulkes/characters.hpp"

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace foulkes {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("character value overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("character value overflow");
    return out;
}

void require_degree(int n) {
    if (n < 0 || n > kMaxCharacterDegree) {
        throw std::invalid_argument("character degree " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxCharacterDegree));
    }
}

/// Multiplicity of each cycle length 1..n.
std::vector<int> multiplicities(const CycleType& t) {
    std::vector<int> m(static_cast<std::size_t>(t.size()) + 1, 0);
    for (int l : t.parts()) ++m[static_cast<std::size_t>(l)];
    return m;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ULL;
        return h;
    }
};

thread_local std::unordered_map<std::vector<int>, std::int64_t, VecHash> mn_cache;

std::int64_t mn_impl(const Partition& lambda, std::span<const int> cycles) {
    if (cycles.empty()) return lambda.empty() ? 1 : 0;
    std::vector<int> key(lambda.vec());
    key.push_back(0);
    key.insert(key.end(), cycles.begin(), cycles.end());
    if (auto it = mn_cache.find(key); it != mn_cache.end()) return it->second;

    const int ell = cycles.front();
    auto beads = beta_set(lambda, lambda.length());
    const std::set<int> occupied(beads.begin(), beads.end());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        const int from = beads[i];
        const int to = from - ell;
        if (to < 0 || occupied.contains(to)) continue;
        // Leg length of the removed rim hook = beads strictly between.
        const auto height = std::distance(occupied.upper_bound(to), occupied.lower_bound(from));
        auto moved = beads;
        moved[i] = to;
        const std::int64_t value = mn_impl(from_beta_set(std::move(moved)), cycles.subspan(1));
        total = checked_add(total, height % 2 == 0 ? value : -value);
    }
    mn_cache.emplace(std::move(key), total);
    return total;
}

std::int64_t double_factorial_odd(int c) {
    // (c - 1)!! for even c >= 0
    std::int64_t out = 1;
    for (int x = c - 1; x > 1; x -= 2) out = checked_mul(out, x);
    return out;
}

std::int64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::int64_t out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
}

}  // namespace

BigInt factorial(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt centralizer_order(const CycleType& t) {
    const auto m = multiplicities(t);
    BigInt out = 1;
    for (std::size_t l = 1; l < m.size(); ++l) {
        for (int j = 0; j < m[l]; ++j) out *= static_cast<unsigned>(l);
        out *= factorial(m[l]);
    }
    return out;
}

BigInt class_size(const CycleType& t) { return factorial(t.size()) / centralizer_order(t); }

int sign_of(const CycleType& t) { return (t.size() - t.length()) % 2 == 0 ? 1 : -1; }

CharacterVector::CharacterVector(int n) : n_(n) {
    require_degree(n);
    for (auto& t : partitions_of(n)) values_.emplace(t, 0);
}

std::int64_t CharacterVector::at(const CycleType& t) const {
    auto it = values_.find(t);
    if (it == values_.end()) throw std::invalid_argument("cycle type of the wrong degree");
    return it->second;
}

void CharacterVector::set(const CycleType& t, std::int64_t value) {
    auto it = values_.find(t);
    if (it == values_.end()) throw std::invalid_argument("cycle type of the wrong degree");
    it->second = value;
}

void CharacterVector::add(const CycleType& t, std::int64_t value) {
    auto it = values_.find(t);
    if (it == values_.end()) throw std::invalid_argument("cycle type of the wrong degree");
    it->second = checked_add(it->second, value);
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& other) {
    if (other.n_ != n_) throw std::invalid_argument("adding characters of different degrees");
    for (const auto& [t, v] : other.values_) add(t, v);
    return *this;
}

std::int64_t mn_character(const Partition& lambda, const CycleType& t) {
    if (lambda.size() != t.size()) throw std::invalid_argument("mn_character: size mismatch");
    require_degree(lambda.size());
    return mn_impl(lambda, t.parts());
}

void clear_character_cache() { mn_cache.clear(); }

CharacterVector irreducible_character(const Partition& lambda) {
    CharacterVector chi(lambda.size());
    for (const auto& [t, v] : chi.values()) chi.set(t, mn_character(lambda, t));
    return chi;
}

CharacterVector foulkes_character_sumform(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("m and k must be nonnegative");
    const int n = 2 * m + k;
    CharacterVector out(n);
    for (auto& lambda : partitions_of(n)) {
        if (odd_parts_count(lambda) == k) out += irreducible_character(lambda);
    }
    return out;
}

std::int64_t matching_fixed_count_enumerated(const CycleType& t) {
    const int n = t.size();
    if (n > 12) throw std::invalid_argument("matching enumeration limited to 12 points");
    if (n % 2 != 0) return 0;
    // Permutation of type t on 0..n-1 with consecutive cycles.
    std::vector<int> g(static_cast<std::size_t>(n));
    int start = 0;
    for (int l : t.parts()) {
        for (int i = 0; i < l; ++i) g[static_cast<std::size_t>(start + i)] = start + (i + 1) % l;
        start += l;
    }
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    std::int64_t count = 0;
    auto recurse = [&](auto&& self) -> void {
        int first = 0;
        while (first < n && partner[static_cast<std::size_t>(first)] >= 0) ++first;
        if (first == n) {
            for (int i = 0; i < n; ++i) {
                const auto gi = static_cast<std::size_t>(g[static_cast<std::size_t>(i)]);
                const int gp = g[static_cast<std::size_t>(partner[static_cast<std::size_t>(i)])];
                if (partner[gi] != gp) return;
            }
            ++count;
            return;
        }
        for (int j = first + 1; j < n; ++j) {
            if (partner[static_cast<std::size_t>(j)] >= 0) continue;
            partner[static_cast<std::size_t>(first)] = j;
            partner[static_cast<std::size_t>(j)] = first;
            self(self);
            partner[static_cast<std::size_t>(first)] = -1;
            partner[static_cast<std::size_t>(j)] = -1;
        }
    };
    recurse(recurse);
    return count;
}

std::int64_t matching_fixed_count_closed_form(const CycleType& t) {
    const auto m = multiplicities(t);
    std::int64_t out = 1;
    for (std::size_t len = 1; len < m.size(); ++len) {
        const int c = m[len];
        const auto l = static_cast<std::int64_t>(len);
        if (len % 2 == 1) {
            if (c % 2 != 0) return 0;
            out = checked_mul(out, checked_mul(double_factorial_odd(c), ipow(l, c / 2)));
        } else {
            std::int64_t ways = 0;
            for (int s = 0; 2 * s <= c; ++s) {
                ways = checked_add(ways,
                                   checked_mul(binomial(c, 2 * s), checked_mul(double_factorial_odd(2 * s), ipow(l, s))));
            }
            out = checked_mul(out, ways);
        }
    }
    return out;
}

std::int64_t matching_fixed_count(const CycleType& t) {
    return t.size() <= 12 ? matching_fixed_count_enumerated(t) : matching_fixed_count_closed_form(t);
}

CharacterVector foulkes_character_induced(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("m and k must be nonnegative");
    const int n = 2 * m + k;
    CharacterVector out(n);
    for (const auto& t : all_partitions(n)) {
        const auto mult = multiplicities(t);
        std::vector<int> take(mult.size(), 0);
        std::int64_t value = 0;
        // Split the cycles of t between the S_{2m} and S_k factors.
        auto split = [&](auto&& self, std::size_t len, int remaining) -> void {
            if (len == 0) {
                if (remaining != 0) return;
                std::vector<int> first;
                std::vector<int> second;
                std::int64_t coeff = 1;
                for (std::size_t l = 1; l < mult.size(); ++l) {
                    coeff = checked_mul(coeff, binomial(mult[l], take[l]));
                    first.insert(first.end(), static_cast<std::size_t>(take[l]), static_cast<int>(l));
                    second.insert(second.end(), static_cast<std::size_t>(mult[l] - take[l]), static_cast<int>(l));
                }
                const CycleType t1 = Partition::from_unsorted(std::move(first));
                const CycleType t2 = Partition::from_unsorted(std::move(second));
                const std::int64_t term = checked_mul(coeff, matching_fixed_count(t1)) * sign_of(t2);
                value = checked_add(value, term);
                return;
            }
            for (int a = 0; a <= mult[len] && a * static_cast<int>(len) <= remaining; ++a) {
                take[len] = a;
                self(self, len - 1, remaining - a * static_cast<int>(len));
            }
            take[len] = 0;
        };
        split(split, mult.size() - 1, 2 * m);
        out.set(t, value);
    }
    return out;
}

BigInt inner_product(const CharacterVector& a, const CharacterVector& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("inner product of characters of different degrees");
    BigInt sum = 0;
    for (const auto& [t, va] : a.values()) {
        const std::int64_t vb = b.at(t);
        if (va == 0 || vb == 0) continue;
        sum += class_size(t) * BigInt(va) * BigInt(vb);
    }
    const BigInt order = factorial(a.degree());
    if (sum % order != 0) throw std::logic_error("inner product is not an integer");
    return sum / order;
}

std::vector<std::pair<Partition, BigInt>> constituents(const CharacterVector& chi) {
    std::vector<std::pair<Partition, BigInt>> out;
    for (auto& lambda : partitions_of(chi.degree())) {
        BigInt mult = inner_product(chi, irreducible_character(lambda));
        if (mult != 0) out.emplace_back(lambda, std::move(mult));
    }
    return out;
}

}  // namespace foulkes
