#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foulkes/characters.hpp"

namespace foulkes {

/// Permutation of {1, ..., n} acting on the right: (i)(gh) = ((i)g)h.
class Permutation {
public:
    explicit Permutation(int n = 0);

    /// images[i - 1] is the image of i. Throws unless it is a bijection.
    static Permutation from_images(std::vector<int> images);

    /// Product of disjoint or overlapping cycles, composed left to right.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }

    /// Image of a point; points above degree() are fixed.
    int operator()(int i) const {
        return (i >= 1 && i <= degree()) ? images_[static_cast<std::size_t>(i - 1)] : i;
    }

    /// Apply *this first, then other. Degrees may differ.
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    Permutation extended(int n) const;

    bool is_identity() const;
    std::uint64_t order() const;
    CycleType cycle_type() const;
    std::string to_cycle_string() const;

    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Canonical basis element of the twisted Foulkes module on {1, ..., 2m + k}:
/// m disjoint pairs (each a < b, sorted by first entry) and an increasing tail.
struct OmegaElement {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> tail;

    int degree() const { return static_cast<int>(2 * pairs.size() + tail.size()); }

    /// partner()[i - 1] is the point paired with i, or 0 for a tail point.
    std::vector<int> partner() const;

    /// The fixed-point-free involution on the paired points.
    Permutation involution() const;

    friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
    friend auto operator<=>(const OmegaElement&, const OmegaElement&) = default;
};

/// Enumeration is refused above this many points.
inline constexpr int kMaxOmegaPoints = 16;

/// C(2m + k, k) * (2m - 1)!!, or 0 if m or k is negative.
std::uint64_t omega_count(int m, int k);

/// Visits every element; tails in lexicographic order, then matchings in
/// lexicographic order. `visit` returns false to stop.
void for_each_omega(int m, int k, const std::function<bool(const OmegaElement&)>& visit);

std::vector<OmegaElement> enumerate_omega(int m, int k);

/// A p-group given by generating permutations.
class PSubgroupSpec {
public:
    /// Throws std::invalid_argument if a generator is not a p-element, or if the
    /// generated group (when small enough to close) is not a p-group.
    PSubgroupSpec(std::string name, int p, int degree, std::vector<Permutation> generators);

    static PSubgroupSpec trivial(int p, int degree);
    /// <z_1 z_2 ... z_r> with z_j = (p(j-1)+1, ..., pj).
    static PSubgroupSpec rotation(int r, int p, int degree);
    /// <z_1> x ... x <z_r>.
    static PSubgroupSpec base(int r, int p, int degree);
    /// <z_1 z_{t+1}, ..., z_t z_{2t}, z_{2t+1}, ..., z_r>.
    static PSubgroupSpec elementary(int t, int r, int p, int degree);
    /// A Sylow p-subgroup of S_{tp} acting diagonally on the blocks
    /// {1..tp} and {tp+1..2tp}, times a Sylow p-subgroup of S_{(r-2t)p} on
    /// {2tp+1, ..., rp}.
    static PSubgroupSpec vertex(int t, int r, int p, int degree);

    const std::string& name() const { return name_; }
    int p() const { return p_; }
    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    /// Group order by closure. Throws std::length_error above `limit` elements.
    std::uint64_t order(std::uint64_t limit = 200000) const;

    /// x^-1 Q x.
    PSubgroupSpec conjugate(const Permutation& x) const;

    /// This group with extra generators added.
    PSubgroupSpec with_generators(const std::vector<Permutation>& extra) const;

private:
    std::string name_;
    int p_;
    int degree_;
    std::vector<Permutation> generators_;
};

/// Generators of a Sylow p-subgroup of the symmetric group on
/// {offset+1, ..., offset+count}: iterated wreath products on the base-p blocks.
std::vector<Permutation> sylow_generators(int count, int p, int offset, int degree);

/// True when every generator maps the pair set of omega to itself.
bool is_fixed_by(const OmegaElement& omega, const std::vector<Permutation>& generators);

/// Elements of Omega(m, k) fixed by every generator of Q.
std::vector<OmegaElement> fixed_points(int m, int k, const PSubgroupSpec& q);
std::uint64_t fixed_point_count(int m, int k, const PSubgroupSpec& q);

/// {t : tp <= m, 2t <= r, (r - 2t)p <= k}.
std::vector<int> t_range(int m, int k, int r, int p);

struct FixedPointStratum {
    int t = 0;
    std::vector<OmegaElement> elements;
};

/// R_r-fixed elements grouped by half the number of R_r-orbits of length p
/// covered by the pairs. One stratum per t with 2t <= r, ascending.
/// Requires rp <= 2m + k.
std::vector<FixedPointStratum> stratify(int m, int k, int r, int p);

/// |Fix(R_r on rp points; tp pairs)| * |Omega(m - tp, k - (r-2t)p)|.
std::uint64_t stratum_size_predicted(int m, int k, int r, int t, int p);

struct StratumOrbitCount {
    std::uint64_t elementary_fixed = 0;  ///< E_t-fixed elements with orbit pairing h*
    std::uint64_t rotation_fixed = 0;    ///< R_r-fixed elements with orbit pairing h*
    std::uint64_t expected = 0;          ///< p^t
};

/// Counts over Omega(tp, (r-2t)p) with orbit pairing h* = (O_1,O_{t+1})...(O_t,O_{2t}).
StratumOrbitCount stratum_orbit_count(int t, int r, int p);

/// For each R_r-orbit O_j (1-based j <= r), the index of the orbit its points
/// are paired with, or 0 when O_j lies in the tail. Throws if some orbit is
/// split between pairs and tail or paired with several orbits.
std::vector<int> orbit_pairing(const OmegaElement& omega, int r, int p);

/// Exponent of p in n!.
int legendre(int n, int p);

/// p^(legendre(tp) + legendre((r - 2t)p)). Requires 2t <= r.
std::uint64_t vertex_order(int t, int r, int p);

}  // namespace foulkes
