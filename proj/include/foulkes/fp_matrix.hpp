#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace foulkes::fp {

using Residue = std::uint32_t;

/// Largest supported modulus is below 2^15, so a product of two residues
/// fits in 32 bits and sums of products fit in 64.
inline constexpr int kMaxModulus = 1 << 15;

inline Residue add_mod(Residue a, Residue b, Residue p) {
    const Residue s = a + b;
    return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }
inline Residue mul_mod(Residue a, Residue b, Residue p) { return (a * b) % p; }
Residue inv_mod(Residue a, Residue p);
Residue reduce(long long value, int p);

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix() = default;
    /// Zero matrix. Throws std::invalid_argument for a bad modulus or shape.
    FpMatrix(int p, int rows, int cols);

    static FpMatrix identity(int p, int n);
    /// Entries reduced mod p. All rows must have the same length.
    static FpMatrix from_rows(int p, const std::vector<std::vector<long long>>& rows, int cols = -1);

    int modulus() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Residue operator()(int r, int c) const { return data_[index(r, c)]; }
    void set(int r, int c, long long value) { data_[index(r, c)] = reduce(value, p_); }

    Residue* row(int r) { return data_.data() + index(r, 0); }
    const Residue* row(int r) const { return data_.data() + index(r, 0); }
    std::vector<Residue> row_vector(int r) const;
    const std::vector<Residue>& data() const { return data_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    /// Rows listed in `which`, in that order.
    FpMatrix select_rows(const std::vector<int>& which) const;
    FpMatrix select_cols(const std::vector<int>& which) const;
    /// Rows of *this followed by rows of other.
    FpMatrix stacked(const FpMatrix& other) const;
    /// Columns of *this followed by columns of other.
    FpMatrix beside(const FpMatrix& other) const;
    void append_row(const std::vector<Residue>& v);

    FpMatrix& operator+=(const FpMatrix& other);
    FpMatrix& operator-=(const FpMatrix& other);
    FpMatrix scaled(Residue c) const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }

    int p_ = 2;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Residue> data_;
};

FpMatrix operator+(FpMatrix a, const FpMatrix& b);
FpMatrix operator-(FpMatrix a, const FpMatrix& b);

struct RrefResult {
    FpMatrix form;
    int rank = 0;
    std::vector<int> pivots;  ///< pivot column of each nonzero row
};

namespace serial {
/// Gauss-Jordan elimination, first nonzero entry as pivot.
RrefResult rref(const FpMatrix& m);
FpMatrix matmul(const FpMatrix& a, const FpMatrix& b);
}  // namespace serial

namespace parallel {
/// Forward elimination without normalizing, then pivot scaling and back
/// substitution, with row updates spread over OpenMP threads. Same output
/// as serial::rref.
RrefResult rref(const FpMatrix& m);
/// Rows of the product split over OpenMP threads.
FpMatrix matmul(const FpMatrix& a, const FpMatrix& b);
}  // namespace parallel

/// Parallel kernels for large inputs outside an active parallel region,
/// serial otherwise.
RrefResult rref(const FpMatrix& m);
FpMatrix matmul(const FpMatrix& a, const FpMatrix& b);

int rank(const FpMatrix& m);
FpMatrix transpose(const FpMatrix& m);

/// Rows form a basis of {v : m v^T = 0}; there are cols - rank of them.
FpMatrix nullspace(const FpMatrix& m);

/// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Residue>> solve(const FpMatrix& a, const std::vector<Residue>& b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

/// Row vector times matrix.
std::vector<Residue> vec_mul(const std::vector<Residue>& v, const FpMatrix& m);

}  // namespace foulkes::fp
