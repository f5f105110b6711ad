#include <doctest.h>

#include <random>
#include <set>

#include "foulkes/abacus.hpp"
#include "oracles.hpp"

using foulkes::Abacus;
using foulkes::Partition;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("abacus encoding") {
    CHECK(Abacus::from_partition(P({}), 3, 3).beads() == std::vector<int>{0, 1, 2});
    CHECK(Abacus::from_partition(P({3, 1, 1}), 3, 3).beads() == std::vector<int>{1, 2, 5});
    CHECK(Abacus(3, {0, 1, 2}).to_partition() == P({}));
    CHECK(Abacus(3, {5, 2, 1}).to_partition() == P({3, 1, 1}));
    CHECK(Abacus(3, {8, 2, 1}).to_partition() == P({6, 1, 1}));
    CHECK(oracle::is_rim_hook(P({6, 1, 1}), P({3, 1, 1})));
    CHECK_THROWS_AS(Abacus(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Abacus(3, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(Abacus::from_partition(P({2, 1}), 3, 1), std::invalid_argument);
}

TEST_CASE("bead moves") {
    const Abacus empty = Abacus::from_partition(P({}), 3, 3);
    CHECK(empty.bead_down_moves().size() == 3);
    const Abacus core = Abacus::from_partition(P({3, 1, 1}), 3);
    CHECK(core.bead_up_moves().empty());
}

TEST_CASE("bound family cores") {
    CHECK(foulkes::bound_family_core(3, 2) == P({3, 1, 1}));
    for (int p : {3, 5, 7}) {
        for (int e = 0; e <= 5; ++e) {
            const Partition g = foulkes::bound_family_core(p, e);
            CAPTURE(p);
            CAPTURE(e);
            CHECK(foulkes::is_p_core(g, p));
            CHECK(foulkes::p_core(g, p).weight == 0);
            // two beads on runner 1, e + 1 on runner p - 1, one elsewhere
            const Abacus a = Abacus::from_partition(g, p, p + 1 + e);
            CHECK(a.runner_count(1) == 2);
            CHECK(a.runner_count(p - 1) == e + 1);
            for (int r = 0; r < p; ++r) {
                if (r != 1 && r != p - 1) CHECK(a.runner_count(r) == 1);
            }
            CHECK(foulkes::odd_parts_count(g) % 2 == g.size() % 2);
        }
    }
}

TEST_CASE("property: abacus round trip") {
    std::mt19937_64 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition lambda = oracle::random_partition(rng, 30);
        for (int p : {3, 5, 7}) {
            const Abacus a = Abacus::from_partition(lambda, p);
            CHECK(a.bead_count() % p == 0);
            CHECK(a.to_partition() == lambda);
            const Abacus wider = Abacus::from_partition(lambda, p, a.bead_count() + p);
            CHECK(wider == a);
            CHECK(wider.normalized().beads() == a.beads());
        }
    }
}

TEST_CASE("property: bead moves are rim hook additions and removals") {
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition lambda = oracle::random_partition(rng, 20);
        for (int p : {3, 5}) {
            // one spare row so hooks that lengthen the first column are visible
            const Abacus a = Abacus::from_partition(lambda, p, Abacus::from_partition(lambda, p).bead_count() + p);
            std::set<Partition> down;
            for (const auto& b : a.bead_down_moves()) down.insert(b.to_partition());
            const auto added = foulkes::add_rim_hook_all(lambda, p);
            CHECK(down == std::set<Partition>(added.begin(), added.end()));
            CHECK(down.size() == a.bead_down_moves().size());
            std::set<Partition> up;
            for (const auto& b : a.bead_up_moves()) up.insert(b.to_partition());
            const auto removed = foulkes::remove_rim_hook_all(lambda, p);
            CHECK(up == std::set<Partition>(removed.begin(), removed.end()));
            CHECK(a.bead_up_moves().empty() == foulkes::is_p_core(lambda, p));
        }
    }
}
