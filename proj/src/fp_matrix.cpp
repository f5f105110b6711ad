#include "foulkes/fp_matrix.hpp"

#include <stdexcept>
#include <utility>

#include <omp.h>

#include "foulkes/partition.hpp"

namespace foulkes::fp {

namespace {

void require_same_modulus(const FpMatrix& a, const FpMatrix& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("matrices over different fields");
}

void require_product_shape(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
}

/// row_dst -= factor * row_src, over columns [from, cols)
void subtract_multiple(Residue* dst, const Residue* src, Residue factor, int from, int cols, Residue p) {
    const Residue neg = p - factor;
    for (int c = from; c < cols; ++c) dst[c] = (dst[c] + neg * src[c]) % p;
}

void scale_row(Residue* row, Residue factor, int from, int cols, Residue p) {
    for (int c = from; c < cols; ++c) row[c] = mul_mod(row[c], factor, p);
}

void swap_rows(FpMatrix& m, int a, int b) {
    if (a == b) return;
    Residue* ra = m.row(a);
    Residue* rb = m.row(b);
    for (int c = 0; c < m.cols(); ++c) std::swap(ra[c], rb[c]);
}

void multiply_rows(const FpMatrix& a, const FpMatrix& b, FpMatrix& out, int r) {
    const auto p = static_cast<std::uint64_t>(a.modulus());
    const int n = b.cols();
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(n), 0);
    const Residue* ar = a.row(r);
    for (int k = 0; k < a.cols(); ++k) {
        const std::uint64_t x = ar[k];
        if (x == 0) continue;
        const Residue* br = b.row(k);
        for (int c = 0; c < n; ++c) acc[static_cast<std::size_t>(c)] += x * br[c];
    }
    Residue* orow = out.row(r);
    for (int c = 0; c < n; ++c) orow[c] = static_cast<Residue>(acc[static_cast<std::size_t>(c)] % p);
}

constexpr long kParallelThreshold = 128L * 128L;

bool use_parallel(long work) { return work >= kParallelThreshold && !omp_in_parallel(); }

}  // namespace

Residue inv_mod(Residue a, Residue p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse");
    long long t = 0, new_t = 1;
    long long r = p, new_r = a % p;
    while (new_r != 0) {
        const long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return static_cast<Residue>(t < 0 ? t + p : t);
}

Residue reduce(long long value, int p) {
    long long r = value % p;
    if (r < 0) r += p;
    return static_cast<Residue>(r);
}

FpMatrix::FpMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    if (p < 2 || p >= kMaxModulus || !is_prime(p)) throw std::invalid_argument("modulus must be a prime below 2^15");
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

FpMatrix FpMatrix::identity(int p, int n) {
    FpMatrix out(p, n, n);
    for (int i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
}

FpMatrix FpMatrix::from_rows(int p, const std::vector<std::vector<long long>>& rows, int cols) {
    const int c = rows.empty() ? std::max(cols, 0) : static_cast<int>(rows.front().size());
    FpMatrix out(p, static_cast<int>(rows.size()), c);
    for (int r = 0; r < out.rows(); ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != c) {
            throw std::invalid_argument("ragged rows");
        }
        for (int j = 0; j < c; ++j) out.set(r, j, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
    }
    return out;
}

std::vector<Residue> FpMatrix::row_vector(int r) const { return {row(r), row(r) + cols_}; }

bool FpMatrix::is_zero() const {
    for (Residue x : data_) {
        if (x != 0) return false;
    }
    return true;
}

FpMatrix FpMatrix::select_rows(const std::vector<int>& which) const {
    FpMatrix out(p_, static_cast<int>(which.size()), cols_);
    for (std::size_t i = 0; i < which.size(); ++i) {
        std::copy(row(which[i]), row(which[i]) + cols_, out.row(static_cast<int>(i)));
    }
    return out;
}

FpMatrix FpMatrix::select_cols(const std::vector<int>& which) const {
    FpMatrix out(p_, rows_, static_cast<int>(which.size()));
    for (int r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < which.size(); ++j) out.row(r)[j] = (*this)(r, which[j]);
    }
    return out;
}

FpMatrix FpMatrix::stacked(const FpMatrix& other) const {
    require_same_modulus(*this, other);
    if (other.cols_ != cols_ && other.rows_ > 0 && rows_ > 0) throw std::invalid_argument("stacking mismatched widths");
    FpMatrix out(p_, rows_ + other.rows_, rows_ > 0 ? cols_ : other.cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

FpMatrix FpMatrix::beside(const FpMatrix& other) const {
    require_same_modulus(*this, other);
    if (other.rows_ != rows_) throw std::invalid_argument("joining mismatched heights");
    FpMatrix out(p_, rows_, cols_ + other.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::copy(row(r), row(r) + cols_, out.row(r));
        std::copy(other.row(r), other.row(r) + other.cols_, out.row(r) + cols_);
    }
    return out;
}

void FpMatrix::append_row(const std::vector<Residue>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

FpMatrix& FpMatrix::operator+=(const FpMatrix& other) {
    require_same_modulus(*this, other);
    if (other.rows_ != rows_ || other.cols_ != cols_) throw std::invalid_argument("adding mismatched shapes");
    const auto p = static_cast<Residue>(p_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = add_mod(data_[i], other.data_[i], p);
    return *this;
}

FpMatrix& FpMatrix::operator-=(const FpMatrix& other) {
    require_same_modulus(*this, other);
    if (other.rows_ != rows_ || other.cols_ != cols_) throw std::invalid_argument("subtracting mismatched shapes");
    const auto p = static_cast<Residue>(p_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = sub_mod(data_[i], other.data_[i], p);
    return *this;
}

FpMatrix FpMatrix::scaled(Residue c) const {
    FpMatrix out = *this;
    const auto p = static_cast<Residue>(p_);
    c %= p;
    for (auto& x : out.data_) x = mul_mod(x, c, p);
    return out;
}

FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
FpMatrix operator-(FpMatrix a, const FpMatrix& b) { return a -= b; }

namespace serial {

RrefResult rref(const FpMatrix& m) {
    RrefResult out{m, 0, {}};
    FpMatrix& a = out.form;
    const auto p = static_cast<Residue>(a.modulus());
    int rank = 0;
    for (int c = 0; c < a.cols() && rank < a.rows(); ++c) {
        int pivot = rank;
        while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        swap_rows(a, rank, pivot);
        scale_row(a.row(rank), inv_mod(a(rank, c), p), c, a.cols(), p);
        for (int r = 0; r < a.rows(); ++r) {
            if (r != rank && a(r, c) != 0) subtract_multiple(a.row(r), a.row(rank), a(r, c), c, a.cols(), p);
        }
        out.pivots.push_back(c);
        ++rank;
    }
    out.rank = rank;
    return out;
}

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
    require_product_shape(a, b);
    FpMatrix out(a.modulus(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) multiply_rows(a, b, out, r);
    return out;
}

}  // namespace serial

namespace parallel {

RrefResult rref(const FpMatrix& m) {
    RrefResult out{m, 0, {}};
    FpMatrix& a = out.form;
    const auto p = static_cast<Residue>(a.modulus());
    const int rows = a.rows();
    const int cols = a.cols();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = rank;
        while (pivot < rows && a(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        swap_rows(a, rank, pivot);
        const Residue inv = inv_mod(a(rank, c), p);
        const Residue* prow = a.row(rank);
#pragma omp parallel for schedule(static)
        for (int r = rank + 1; r < rows; ++r) {
            const Residue x = a(r, c);
            if (x != 0) subtract_multiple(a.row(r), prow, mul_mod(x, inv, p), c, cols, p);
        }
        out.pivots.push_back(c);
        ++rank;
    }
    for (int i = 0; i < rank; ++i) {
        const int c = out.pivots[static_cast<std::size_t>(i)];
        scale_row(a.row(i), inv_mod(a(i, c), p), c, cols, p);
    }
    for (int i = rank - 1; i > 0; --i) {
        const int c = out.pivots[static_cast<std::size_t>(i)];
        const Residue* prow = a.row(i);
#pragma omp parallel for schedule(static)
        for (int r = 0; r < i; ++r) {
            const Residue x = a(r, c);
            if (x != 0) subtract_multiple(a.row(r), prow, x, c, cols, p);
        }
    }
    out.rank = rank;
    return out;
}

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
    require_product_shape(a, b);
    FpMatrix out(a.modulus(), a.rows(), b.cols());
#pragma omp parallel for schedule(static)
    for (int r = 0; r < a.rows(); ++r) multiply_rows(a, b, out, r);
    return out;
}

}  // namespace parallel

RrefResult rref(const FpMatrix& m) {
    const long work = static_cast<long>(m.rows()) * m.cols();
    return use_parallel(work) ? parallel::rref(m) : serial::rref(m);
}

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
    const long work = static_cast<long>(a.rows()) * b.cols();
    return use_parallel(work) ? parallel::matmul(a, b) : serial::matmul(a, b);
}

int rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix transpose(const FpMatrix& m) {
    FpMatrix out(m.modulus(), m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out.row(c)[r] = m(r, c);
    }
    return out;
}

FpMatrix nullspace(const FpMatrix& m) {
    const RrefResult red = rref(m);
    const auto p = static_cast<Residue>(m.modulus());
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : red.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    FpMatrix out(m.modulus(), m.cols() - red.rank, m.cols());
    int row = 0;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Residue* v = out.row(row++);
        v[f] = 1;
        for (int i = 0; i < red.rank; ++i) {
            v[red.pivots[static_cast<std::size_t>(i)]] = sub_mod(0, red.form(i, f), p);
        }
    }
    return out;
}

std::optional<std::vector<Residue>> solve(const FpMatrix& a, const std::vector<Residue>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    FpMatrix rhs(a.modulus(), a.rows(), 1);
    for (int r = 0; r < a.rows(); ++r) rhs.set(r, 0, b[static_cast<std::size_t>(r)]);
    const RrefResult red = rref(a.beside(rhs));
    std::vector<Residue> x(static_cast<std::size_t>(a.cols()), 0);
    for (int i = 0; i < red.rank; ++i) {
        const int c = red.pivots[static_cast<std::size_t>(i)];
        if (c == a.cols()) return std::nullopt;
        x[static_cast<std::size_t>(c)] = red.form(i, a.cols());
    }
    return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const int n = m.rows();
    const RrefResult red = rref(m.beside(FpMatrix::identity(m.modulus(), n)));
    if (red.rank < n || red.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
    std::vector<int> right(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) right[static_cast<std::size_t>(i)] = n + i;
    return red.form.select_cols(right);
}

std::vector<Residue> vec_mul(const std::vector<Residue>& v, const FpMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("vec_mul length mismatch");
    const auto p = static_cast<std::uint64_t>(m.modulus());
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(m.cols()), 0);
    for (int r = 0; r < m.rows(); ++r) {
        const std::uint64_t x = v[static_cast<std::size_t>(r)];
        if (x == 0) continue;
        const Residue* row = m.row(r);
        for (int c = 0; c < m.cols(); ++c) acc[static_cast<std::size_t>(c)] += x * row[c];
    }
    std::vector<Residue> out(acc.size());
    for (std::size_t c = 0; c < acc.size(); ++c) out[c] = static_cast<Residue>(acc[c] % p);
    return out;
}

}  // namespace foulkes::fp
