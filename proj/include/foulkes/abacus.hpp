#pragma once

#include <string>
#include <vector>

#include "foulkes/partition.hpp"

namespace foulkes {

/// James abacus with p runners. Position q sits on runner q % p in row
/// q / p; row 0 is the top row. Stored as a strictly increasing bead list.
class Abacus {
public:
    /// Throws std::invalid_argument on repeated or negative positions, or p < 2.
    Abacus(int p, std::vector<int> beads);

    /// Beta-set of lambda with `nbeads` beads.
    static Abacus from_partition(const Partition& lambda, int p, int nbeads);

    /// Normal form: the smallest multiple of p that is >= lambda.length().
    static Abacus from_partition(const Partition& lambda, int p);

    int runners() const { return p_; }
    int bead_count() const { return static_cast<int>(beads_.size()); }
    const std::vector<int>& beads() const { return beads_; }
    bool occupied(int position) const;

    /// Number of beads on runner r.
    int runner_count(int r) const;

    Partition to_partition() const;

    /// Same partition re-encoded with the normal-form bead count.
    Abacus normalized() const;

    /// Each bead moved from q to an empty q + p, in increasing order of q.
    std::vector<Abacus> bead_down_moves() const;
    /// Each bead moved from q to an empty q - p >= 0.
    std::vector<Abacus> bead_up_moves() const;

    /// Grid of filled/empty cells, one row per abacus row. Diagnostic only.
    std::string pretty() const;

    /// Equality of the represented partitions (normal forms compared).
    friend bool operator==(const Abacus& a, const Abacus& b) {
        return a.p_ == b.p_ && a.to_partition() == b.to_partition();
    }

private:
    int p_;
    std::vector<int> beads_;
};

/// The p-core with two beads on runner 1, e + 1 beads on runner p - 1 and
/// one bead on every other runner, all pushed to the top. Runner indices are
/// taken literally in the beta-set convention above; with that reading
/// (p, e) = (3, 2) gives (3,1,1).
Partition bound_family_core(int p, int e);

}  // namespace foulkes
