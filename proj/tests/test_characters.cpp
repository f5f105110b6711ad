#include <doctest.h>

#include <limits>
#include <thread>

#include "foulkes/blocks.hpp"
#include "foulkes/characters.hpp"
#include "oracles.hpp"

using foulkes::BigInt;
using foulkes::CharacterVector;
using foulkes::Partition;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

CharacterVector sum_of(const std::vector<Partition>& labels, int n) {
    CharacterVector out(n);
    for (const auto& l : labels) out += foulkes::irreducible_character(l);
    return out;
}

}  // namespace

TEST_CASE("class sizes") {
    CHECK(foulkes::class_size(P({1, 1, 1})) == 1);
    CHECK(foulkes::class_size(P({3})) == 2);
    for (int n = 0; n <= 10; ++n) {
        BigInt total = 0;
        for (const auto& t : foulkes::all_partitions(n)) total += foulkes::class_size(t);
        CHECK(total == foulkes::factorial(n));
    }
    CHECK(foulkes::factorial(21) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("murnaghan-nakayama values") {
    for (int n = 1; n <= 8; ++n) {
        const Partition row({n});
        const Partition column = foulkes::conjugate(row);
        for (const auto& t : foulkes::all_partitions(n)) {
            CHECK(foulkes::mn_character(row, t) == 1);
            CHECK(foulkes::mn_character(column, t) == foulkes::sign_of(t));
        }
    }
    CHECK(foulkes::mn_character(P({2, 2}), P({1, 1, 1, 1})) == 2);
    CHECK(foulkes::mn_character(P({2, 1}), P({3})) == -1);
    CHECK(foulkes::mn_character(P({2, 1}), P({2, 1})) == 0);
    CHECK_THROWS_AS(foulkes::mn_character(P({2, 1}), P({2})), std::invalid_argument);
}

TEST_CASE("property: degrees match the hook length formula") {
    for (int n = 0; n <= 12; ++n) {
        const Partition identity = Partition::from_unsorted(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& lambda : foulkes::all_partitions(n)) {
            CHECK(static_cast<std::uint64_t>(foulkes::mn_character(lambda, identity)) == oracle::hook_length_count(lambda));
        }
    }
}

TEST_CASE("property: orthogonality of irreducibles") {
    for (int n = 1; n <= 8; ++n) {
        const auto parts = foulkes::all_partitions(n);
        std::vector<CharacterVector> chars;
        for (const auto& l : parts) chars.push_back(foulkes::irreducible_character(l));
        for (std::size_t i = 0; i < chars.size(); ++i) {
            for (std::size_t j = i; j < chars.size(); ++j) {
                CHECK(foulkes::inner_product(chars[i], chars[j]) == (i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("foulkes characters by the sum form") {
    CHECK(foulkes::foulkes_character_sumform(2, 0) == sum_of({P({4}), P({2, 2})}, 4));
    const auto c11 = foulkes::foulkes_character_sumform(1, 1);
    CHECK(c11 == sum_of({P({3}), P({2, 1})}, 3));
    CHECK(c11.at(P({1, 1, 1})) == 3);
    CHECK(foulkes::foulkes_character_sumform(0, 2) == sum_of({P({1, 1})}, 2));
}

TEST_CASE("foulkes characters by induction") {
    CHECK(foulkes::foulkes_character_induced(1, 0) == sum_of({P({2})}, 2));
    CHECK(foulkes::foulkes_character_induced(3, 0).at(P({1, 1, 1, 1, 1, 1})) == 15);
    CHECK(foulkes::foulkes_character_induced(1, 1).at(P({1, 1, 1})) == 3);
    const auto c = foulkes::foulkes_character_induced(2, 3);
    CHECK(c.at(Partition::from_unsorted(std::vector<int>(7, 1))) == static_cast<std::int64_t>(35 * 3));
}

TEST_CASE("property: both routes agree and are multiplicity-free") {
    for (int n = 0; n <= 10; ++n) {
        for (int m = 0; 2 * m <= n; ++m) {
            const int k = n - 2 * m;
            CAPTURE(m);
            CAPTURE(k);
            const auto sum = foulkes::foulkes_character_sumform(m, k);
            const auto induced = foulkes::foulkes_character_induced(m, k);
            CHECK(sum == induced);
            for (const auto& lambda : foulkes::all_partitions(n)) {
                const BigInt ip = foulkes::inner_product(induced, foulkes::irreducible_character(lambda));
                CHECK((ip == 0 || ip == 1));
                CHECK((ip == 1) == (foulkes::odd_parts_count(lambda) == k));
            }
        }
    }
}

TEST_CASE("matching counts: enumeration and closed form agree") {
    for (int n = 0; n <= 12; n += 2) {
        for (const auto& t : foulkes::all_partitions(n)) {
            CAPTURE(foulkes::to_string(t));
            CHECK(foulkes::matching_fixed_count_enumerated(t) == foulkes::matching_fixed_count_closed_form(t));
        }
    }
    CHECK(foulkes::matching_fixed_count(Partition::from_unsorted(std::vector<int>(14, 1))) == 135135);
}

TEST_CASE("property: block filter of the foulkes character is the candidate set") {
    for (int p : {3, 5}) {
        for (const auto& gamma : foulkes::cores_up_to(p, 6)) {
            for (int k = 0; k <= 4; ++k) {
                const auto e = foulkes::candidate_set(gamma, k, p);
                const int n = gamma.size() + e.weight * p;
                if (n > 14 || (n - k) % 2 != 0) continue;
                CAPTURE(p);
                CAPTURE(foulkes::to_string(gamma));
                CAPTURE(k);
                const auto chi = foulkes::foulkes_character_sumform((n - k) / 2, k);
                std::vector<Partition> in_block;
                for (const auto& [lambda, mult] : foulkes::constituents(chi)) {
                    CHECK(mult == 1);
                    const auto cw = foulkes::p_core(lambda, p);
                    if (cw.core == gamma && cw.weight == e.weight) in_block.push_back(lambda);
                }
                CHECK(in_block == e.members);
            }
        }
    }
}

TEST_CASE("concurrent evaluation returns the same values") {
    const auto reference = foulkes::irreducible_character(P({4, 3, 2, 1}));
    std::vector<CharacterVector> results(4, CharacterVector(10));
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i) {
        threads.emplace_back([&results, i] { results[i] = foulkes::irreducible_character(Partition({4, 3, 2, 1})); });
    }
    for (auto& t : threads) t.join();
    for (const auto& r : results) CHECK(r == reference);
}

TEST_CASE("degree cap") {
    CHECK_THROWS(foulkes::irreducible_character(Partition({21})));
}
