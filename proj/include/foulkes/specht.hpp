#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "foulkes/fp_matrix.hpp"
#include "foulkes/module.hpp"
#include "foulkes/partition.hpp"

namespace foulkes {

/// Default largest n for explicit Specht modules.
inline constexpr int kOracleCap = 10;
/// Largest n accepted when the cap is raised.
inline constexpr int kOracleHardCap = 12;

/// Young tableau stored row by row.
using Tableau = std::vector<std::vector<int>>;

/// Standard tableaux of the shape in a fixed order: entries 1, 2, ... are
/// placed in the topmost available row first.
std::vector<Tableau> standard_tableaux(const Partition& shape);

bool is_standard(const Tableau& t);

/// Row index of each entry 1..n packed four bits per entry.
std::uint64_t tabloid_key(const Tableau& t);

/// The polytabloid e_t as signed tabloids, sorted by key.
std::vector<std::pair<std::uint64_t, int>> polytabloid(const Tableau& t);

struct SpechtModule {
    Partition shape;
    std::vector<Tableau> basis;  ///< standard tableaux
    FpModule module;             ///< Coxeter generators s_1, ..., s_{n-1}
    fp::FpMatrix gram;           ///< standard form on the polytabloid basis
};

/// Straightens e_t (t any filling of the shape) into the standard basis
/// through Garnir relations, mod p. Results are memoized by tableau.
class Straightener {
public:
    Straightener(const Partition& shape, int p);

    const std::vector<Tableau>& basis() const { return basis_; }

    /// Coefficients of e_t on the standard basis.
    std::vector<fp::Residue> straighten(const Tableau& t);

private:
    const std::map<int, fp::Residue>& expand(const Tableau& t);

    Partition shape_;
    int p_;
    std::vector<Tableau> basis_;
    std::map<Tableau, int> index_;
    std::map<Tableau, std::map<int, fp::Residue>> memo_;
};

/// Specht module of mu over F_p. Throws std::invalid_argument if |mu|
/// exceeds `cap` (at most kOracleHardCap).
SpechtModule specht_module(const Partition& mu, int p, int cap = kOracleCap);

/// S^nu modulo the radical of its form. Throws std::invalid_argument if nu
/// is not p-regular. With `verify`, the Meataxe confirms irreducibility.
FpModule simple_head(const Partition& nu, int p, int cap = kOracleCap, bool verify = true);

}  // namespace foulkes
