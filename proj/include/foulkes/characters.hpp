#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foulkes/partition.hpp"

namespace foulkes {

using BigInt = boost::multiprecision::cpp_int;

/// Cycle type of a permutation in S_n, read as a partition of n.
using CycleType = Partition;

/// Characters are evaluated for n up to this bound.
inline constexpr int kMaxCharacterDegree = 20;

BigInt factorial(int n);

/// |C_{S_n}(g)| = prod_l l^{m_l} m_l! for g of cycle type t.
BigInt centralizer_order(const CycleType& t);

/// n! / centralizer_order(t).
BigInt class_size(const CycleType& t);

/// Sign of a permutation of the given cycle type.
int sign_of(const CycleType& t);

/// Integer-valued class function on S_n, stored on every cycle type of n.
class CharacterVector {
public:
    explicit CharacterVector(int n);

    int degree() const { return n_; }
    std::int64_t at(const CycleType& t) const;
    void set(const CycleType& t, std::int64_t value);
    /// Checked addition; throws std::overflow_error.
    void add(const CycleType& t, std::int64_t value);

    /// Keys are cycle types in descending lexicographic order.
    const std::map<CycleType, std::int64_t, std::greater<>>& values() const { return values_; }

    CharacterVector& operator+=(const CharacterVector& other);
    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;

private:
    int n_;
    std::map<CycleType, std::int64_t, std::greater<>> values_;
};

/// chi^lambda(t) by the Murnaghan-Nakayama rule on beta-sets. Memoized per
/// thread. Throws std::invalid_argument on size mismatch and
/// std::overflow_error if a value leaves the int64 range.
std::int64_t mn_character(const Partition& lambda, const CycleType& t);

/// Drops the calling thread's memo table.
void clear_character_cache();

CharacterVector irreducible_character(const Partition& lambda);

/// Sum of chi^lambda over partitions of 2m + k with exactly k odd parts.
CharacterVector foulkes_character_sumform(int m, int k);

/// Number of perfect matchings of {1..2m} fixed by a permutation of cycle
/// type t, counted by direct enumeration. Requires |t| <= 12.
std::int64_t matching_fixed_count_enumerated(const CycleType& t);

/// Same count from the closed form over cycle lengths: cycles of odd length
/// pair up with an equal-length partner (l ways each); cycles of even length
/// either pair up or are matched to themselves by the half-turn.
std::int64_t matching_fixed_count_closed_form(const CycleType& t);

/// Enumeration for |t| <= 12, closed form above.
std::int64_t matching_fixed_count(const CycleType& t);

/// Character of (H^{(2^m)} (x) sgn_{S_k}) induced from S_{2m} x S_k,
/// via the Young-subgroup class-fusion formula.
CharacterVector foulkes_character_induced(int m, int k);

/// (1/n!) sum_t |class(t)| a(t) b(t). Throws std::logic_error if the sum
/// is not divisible by n!, std::invalid_argument if degrees differ.
BigInt inner_product(const CharacterVector& a, const CharacterVector& b);

/// Multiplicity of chi^lambda in `chi`, for every lambda of n with nonzero
/// multiplicity, in descending lexicographic order.
std::vector<std::pair<Partition, BigInt>> constituents(const CharacterVector& chi);

}  // namespace foulkes
