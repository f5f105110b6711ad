#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "foulkes/fp_matrix.hpp"

namespace foulkes {

/// Module over F_p for a group given by generators. Vectors are rows and
/// generator i acts by v -> v * actions[i].
struct FpModule {
    int p = 0;
    int dim = 0;
    std::vector<fp::FpMatrix> actions;
    std::string tag;
};

/// Throws std::invalid_argument unless every action is a dim x dim matrix mod p.
void check_module(const FpModule& m);

/// RREF basis of the smallest submodule containing the rows of `seeds`.
fp::FpMatrix spin(const FpModule& m, const fp::FpMatrix& seeds);

/// Action on a submodule given by an RREF basis (coordinates read off the
/// pivot columns).
FpModule submodule(const FpModule& m, const fp::FpMatrix& basis);

/// Action on M / U for U given by an RREF basis; the quotient basis is the
/// images of the unit vectors in the non-pivot columns.
FpModule quotient(const FpModule& m, const fp::FpMatrix& basis);

/// Module with every action transposed (an action of the opposite algebra).
FpModule transposed(const FpModule& m);

struct MeataxeOptions {
    std::uint64_t seed = 7;
    int max_attempts = 200;  ///< random algebra elements tried per split
    int max_word = 6;        ///< longest generator word in a random element
    int retries = 2;         ///< reseeded reruns after the attempt cap is hit
};

/// Either a proper nonzero submodule (RREF basis) or a certificate of
/// irreducibility.
struct SplitResult {
    bool irreducible = false;
    fp::FpMatrix submodule;
};

/// One Meataxe step with Norton's irreducibility test. Throws
/// MeataxeCapExceeded when no decision is reached in max_attempts.
SplitResult meataxe_split(const FpModule& m, std::mt19937_64& rng, const MeataxeOptions& options);

bool is_irreducible(const FpModule& m, const MeataxeOptions& options = {});

/// Irreducible subquotients of a composition series, bottom to top.
std::vector<FpModule> composition_series(const FpModule& m, const MeataxeOptions& options = {});

/// dim Hom(a, b) for irreducible a, solved through a cyclic generator of a:
/// a homomorphism is fixed by the image w of one vector, and w is cut out
/// by one linear condition per spinning relation.
int hom_dimension(const FpModule& a, const FpModule& b);

/// Multiplicity of each library entry among the composition factors of m,
/// matched by dimension and, on ties, by a nonzero homomorphism. Throws
/// std::logic_error if a factor matches no entry.
std::vector<int> composition_factors(const FpModule& m, const std::vector<FpModule>& library,
                                     const MeataxeOptions& options = {});

}  // namespace foulkes
