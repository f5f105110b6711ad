#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foulkes {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is a valid value and has size 0.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing with
    /// every entry >= 1. Trailing zeros are rejected, not stripped.
    explicit Partition(std::vector<int> parts);

    /// Sorts into decreasing order and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part (0-based), 0 beyond the last part.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    int operator[](int i) const { return part(i); }

    /// Lexicographic on the parts; "descending lexicographic order" means
    /// sorting with std::greater.
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

struct CoreAndWeight {
    Partition core;
    int weight = 0;

    friend bool operator==(const CoreAndWeight&, const CoreAndWeight&) = default;
};

/// A p-block of a symmetric group: core + weight, n = |core| + weight * p.
struct BlockLabel {
    int p = 0;
    Partition core;
    int weight = 0;

    int degree() const { return core.size() + weight * p; }
    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

Partition conjugate(const Partition& lambda);

/// Dominance order. Throws std::invalid_argument if the sizes differ.
bool dominates(const Partition& lambda, const Partition& mu);

int odd_parts_count(const Partition& lambda);

/// No value is repeated p or more times.
bool is_p_regular(const Partition& lambda, int p);

bool is_prime(int n);

/// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(int p);

/// Beta-set {lambda_i + nbeads - i : 1 <= i <= nbeads}, strictly decreasing.
/// Throws std::invalid_argument if nbeads < lambda.length().
std::vector<int> beta_set(const Partition& lambda, int nbeads);

/// Inverse of beta_set; `beads` need not be sorted but must be distinct
/// and nonnegative.
Partition from_beta_set(std::vector<int> beads);

/// Removes all rim p-hooks (beta-set push-up on each runner).
CoreAndWeight p_core(const Partition& lambda, int p);

bool is_p_core(const Partition& lambda, int p);

/// Every partition obtained by adding one rim p-hook, descending lex order.
std::vector<Partition> add_rim_hook_all(const Partition& lambda, int p);

/// Every partition obtained by removing one rim p-hook, descending lex order.
std::vector<Partition> remove_rim_hook_all(const Partition& lambda, int p);

/// Lazy stream of the partitions of n in descending lexicographic order.
class PartitionStream {
public:
    explicit PartitionStream(int n);

    /// Returns the next partition, or nullopt after the last one.
    std::optional<Partition> next();

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(PartitionStream* s) : stream_(s) { advance(); }

        const Partition& operator*() const { return *current_; }
        const Partition* operator->() const { return &*current_; }
        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }
        friend bool operator==(const iterator& it, std::default_sentinel_t) {
            return !it.current_.has_value();
        }

    private:
        void advance() { current_ = stream_->next(); }
        PartitionStream* stream_ = nullptr;
        std::optional<Partition> current_;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() { return {}; }

private:
    int n_;
    std::vector<int> state_;
    bool started_ = false;
    bool done_ = false;
};

inline PartitionStream partitions_of(int n) { return PartitionStream(n); }

/// Materialized partitions_of(n).
std::vector<Partition> all_partitions(int n);

// Text form: "8,4,2". Parsing accepts exponent shorthand "5,4,2,1^4", any
// order of parts, zeros, surrounding whitespace, and "", "()" or "0" for the
// empty partition. Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

/// Canonical comma-separated form; the empty partition prints as "".
std::string to_string(const Partition& lambda);

/// Display form with runs of length >= 4 written as v^r, "()" when empty.
std::string to_display_string(const Partition& lambda);

}  // namespace foulkes
