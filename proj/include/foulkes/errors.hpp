#pragma once

#include <stdexcept>
#include <string>

namespace foulkes {

/// Column synthesis refused: k >= p and w_{k-p}(core) == w_k(core) - 1.
class HypothesisViolation : public std::runtime_error {
public:
    HypothesisViolation(const std::string& what, int w_k, int w_k_minus_p)
        : std::runtime_error(what), w_k(w_k), w_k_minus_p(w_k_minus_p) {}
    int w_k;
    int w_k_minus_p;
};

/// Iterative deepening for w_k hit its configured cap.
class SearchCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Meataxe failed to split or certify a module within its attempt budget.
class MeataxeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A synthesized column disagrees with oracle decomposition numbers.
class OracleMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace foulkes
