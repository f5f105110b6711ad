#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "foulkes/partition.hpp"
#include "oracles.hpp"

using foulkes::Partition;
using foulkes::parse_partition;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("partition construction rejects bad part lists") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
    CHECK(P({}).size() == 0);
    CHECK(Partition::from_unsorted({0, 2, 5, 0, 2}) == P({5, 2, 2}));
}

TEST_CASE("conjugate") {
    CHECK(foulkes::conjugate(P({3, 1, 1})) == P({3, 1, 1}));
    CHECK(foulkes::conjugate(P({})) == P({}));
    CHECK(foulkes::conjugate(P({4, 2})) == P({2, 2, 1, 1}));
}

TEST_CASE("dominance examples") {
    CHECK(foulkes::dominates(P({8, 4, 2}), P({6, 6, 2})));
    CHECK(foulkes::dominates(P({6, 6, 2}), P({6, 4, 4})));
    const Partition a = P({11, 4, 4, 3, 1, 1, 1, 1});
    const Partition b = P({9, 5, 5, 5, 1, 1});
    CHECK_FALSE(foulkes::dominates(a, b));
    CHECK_FALSE(foulkes::dominates(b, a));
    CHECK_THROWS_AS(foulkes::dominates(P({2}), P({1})), std::invalid_argument);
}

TEST_CASE("odd parts") {
    CHECK(foulkes::odd_parts_count(P({9, 5, 5, 5, 1, 1})) == 6);
    CHECK(foulkes::odd_parts_count(P({8, 4, 2})) == 0);
    CHECK(foulkes::odd_parts_count(P({})) == 0);
}

TEST_CASE("p-core examples") {
    auto cw = foulkes::p_core(P({8, 4, 2}), 3);
    CHECK(cw.core == P({3, 1, 1}));
    CHECK(cw.weight == 3);
    cw = foulkes::p_core(P({3, 1, 1}), 3);
    CHECK(cw.core == P({3, 1, 1}));
    CHECK(cw.weight == 0);
    cw = foulkes::p_core(P({5}), 5);
    CHECK(cw.core == P({}));
    CHECK(cw.weight == 1);
}

TEST_CASE("adding rim hooks") {
    const auto from_two = foulkes::add_rim_hook_all(P({2}), 3);
    CHECK(std::set<Partition>(from_two.begin(), from_two.end()) ==
          std::set<Partition>{P({5}), P({2, 2, 1}), P({2, 1, 1, 1})});
    CHECK(std::set<Partition>(from_two.begin(), from_two.end()) == oracle::rim_hooks_added(P({2}), 3));
    const auto from_empty = foulkes::add_rim_hook_all(P({}), 3);
    CHECK(from_empty == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
}

TEST_CASE("p-regularity") {
    CHECK(foulkes::is_p_regular(P({6, 4, 2, 2}), 3));
    CHECK_FALSE(foulkes::is_p_regular(P({1, 1, 1}), 3));
    CHECK(foulkes::is_p_regular(P({10, 5, 4, 2, 1, 1, 1, 1, 1}), 7));
}

TEST_CASE("partition stream order and counts") {
    CHECK(foulkes::all_partitions(0) == std::vector<Partition>{P({})});
    CHECK(foulkes::all_partitions(4) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    for (int n = 0; n <= 25; ++n) {
        CAPTURE(n);
        std::uint64_t count = 0;
        std::optional<Partition> prev;
        for (const auto& lambda : foulkes::partitions_of(n)) {
            CHECK(lambda.size() == n);
            if (prev) CHECK(*prev > lambda);
            prev = lambda;
            ++count;
        }
        CHECK(count == oracle::partition_count(n));
    }
    CHECK(foulkes::all_partitions(10).size() == 42);
}

TEST_CASE("text form") {
    CHECK(parse_partition("5,4,2,1^4") == P({5, 4, 2, 1, 1, 1, 1}));
    CHECK(parse_partition(" 2, 5 ,0") == P({5, 2}));
    CHECK(parse_partition("") == P({}));
    CHECK(parse_partition("()") == P({}));
    CHECK(parse_partition("0") == P({}));
    CHECK(parse_partition("(8,4,2)") == P({8, 4, 2}));
    CHECK_THROWS_AS(parse_partition("3,a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1^"), std::invalid_argument);
    CHECK(foulkes::to_string(P({8, 4, 2})) == "8,4,2");
    CHECK(foulkes::to_string(P({})) == "");
    CHECK(foulkes::to_display_string(P({15, 9, 2, 1, 1, 1, 1})) == "15,9,2,1^4");
    CHECK(foulkes::to_display_string(P({})) == "()");
}

TEST_CASE("beta sets") {
    CHECK(foulkes::beta_set(P({3, 1, 1}), 3) == std::vector<int>{5, 2, 1});
    CHECK(foulkes::from_beta_set({1, 5, 2}) == P({3, 1, 1}));
    CHECK(foulkes::from_beta_set({0, 1, 2}) == P({}));
    CHECK_THROWS_AS(foulkes::beta_set(P({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("property: partition invariants under random sampling") {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 400; ++trial) {
        const Partition lambda = oracle::random_partition(rng, 40);
        CAPTURE(foulkes::to_string(lambda));
        CHECK(foulkes::conjugate(foulkes::conjugate(lambda)) == lambda);
        CHECK(parse_partition(foulkes::to_string(lambda)) == lambda);
        CHECK(parse_partition(foulkes::to_display_string(lambda)) == lambda);
        CHECK(foulkes::odd_parts_count(lambda) % 2 == lambda.size() % 2);
        for (int p : {3, 5, 7}) {
            const auto cw = foulkes::p_core(lambda, p);
            CHECK(cw.core.size() + cw.weight * p == lambda.size());
            CHECK(foulkes::is_p_core(cw.core, p));
            const auto again = foulkes::p_core(cw.core, p);
            CHECK(again.core == cw.core);
            CHECK(again.weight == 0);
        }
    }
}

TEST_CASE("property: p-core agrees with diagram hook removal") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const Partition lambda = oracle::random_partition(rng, 13);
        for (int p : {3, 5}) {
            CAPTURE(foulkes::to_string(lambda));
            CAPTURE(p);
            const auto [core, weight] = oracle::core_by_cells(lambda, p);
            const auto cw = foulkes::p_core(lambda, p);
            CHECK(cw.core == core);
            CHECK(cw.weight == weight);
        }
    }
}

TEST_CASE("property: rim hook addition matches cell search and keeps the core") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const Partition lambda = oracle::random_partition(rng, 9);
        for (int p : {3, 5}) {
            CAPTURE(foulkes::to_string(lambda));
            const auto added = foulkes::add_rim_hook_all(lambda, p);
            CHECK(std::set<Partition>(added.begin(), added.end()) == oracle::rim_hooks_added(lambda, p));
            const auto base = foulkes::p_core(lambda, p);
            for (const auto& mu : added) {
                const auto cw = foulkes::p_core(mu, p);
                CHECK(cw.core == base.core);
                CHECK(cw.weight == base.weight + 1);
                const auto back = foulkes::remove_rim_hook_all(mu, p);
                CHECK(std::find(back.begin(), back.end(), lambda) != back.end());
            }
        }
    }
}

TEST_CASE("property: dominance is a partial order reversed by conjugation") {
    for (int n : {6, 8, 10}) {
        const auto parts = foulkes::all_partitions(n);
        for (const auto& a : parts) {
            CHECK(foulkes::dominates(a, a));
            for (const auto& b : parts) {
                if (a != b && foulkes::dominates(a, b)) {
                    CHECK_FALSE(foulkes::dominates(b, a));
                    CHECK(foulkes::dominates(foulkes::conjugate(b), foulkes::conjugate(a)));
                }
            }
        }
        // transitivity on a sample of triples
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        for (int i = 0; i < 3000; ++i) {
            const auto& a = parts[pick(rng)];
            const auto& b = parts[pick(rng)];
            const auto& c = parts[pick(rng)];
            if (foulkes::dominates(a, b) && foulkes::dominates(b, c)) CHECK(foulkes::dominates(a, c));
        }
    }
}
