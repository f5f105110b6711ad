#include "foulkes/module.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "foulkes/errors.hpp"

namespace foulkes {

using fp::FpMatrix;
using fp::Residue;

namespace {

/// Rows kept in semi-echelon form: row i is 1 at pivots[i] and 0 at every
/// earlier pivot.
class EchelonBasis {
public:
    EchelonBasis(int p, int dim) : p_(static_cast<Residue>(p)), dim_(dim) {}

    /// Reduces v in place, recording the multiples subtracted.
    void reduce(std::vector<Residue>& v, std::vector<Residue>* coeffs = nullptr) const {
        if (coeffs) coeffs->assign(rows_.size(), 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Residue c = v[static_cast<std::size_t>(pivots_[i])];
            if (c == 0) continue;
            if (coeffs) (*coeffs)[i] = c;
            const auto& row = rows_[i];
            const Residue neg = p_ - c;
            for (int j = 0; j < dim_; ++j) v[static_cast<std::size_t>(j)] = (v[static_cast<std::size_t>(j)] + neg * row[static_cast<std::size_t>(j)]) % p_;
        }
    }

    /// Appends a reduced nonzero vector after scaling it to 1 at its first
    /// nonzero entry; returns the scale used, or 0 if v is zero.
    Residue append(std::vector<Residue>& v) {
        int lead = 0;
        while (lead < dim_ && v[static_cast<std::size_t>(lead)] == 0) ++lead;
        if (lead == dim_) return 0;
        const Residue scale = fp::inv_mod(v[static_cast<std::size_t>(lead)], p_);
        for (auto& x : v) x = fp::mul_mod(x, scale, p_);
        rows_.push_back(v);
        pivots_.push_back(lead);
        return scale;
    }

    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<Residue>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    FpMatrix matrix() const {
        FpMatrix out(static_cast<int>(p_), 0, dim_);
        for (const auto& r : rows_) out.append_row(r);
        return out;
    }

private:
    Residue p_;
    int dim_;
    std::vector<std::vector<Residue>> rows_;
    std::vector<int> pivots_;
};

std::vector<int> leading_columns(const FpMatrix& basis) {
    std::vector<int> out;
    for (int r = 0; r < basis.rows(); ++r) {
        int c = 0;
        while (c < basis.cols() && basis(r, c) == 0) ++c;
        if (c == basis.cols()) throw std::invalid_argument("basis has a zero row");
        out.push_back(c);
    }
    return out;
}

FpMatrix random_element(const FpModule& m, std::mt19937_64& rng, const MeataxeOptions& options) {
    FpMatrix x(m.p, m.dim, m.dim);
    if (m.actions.empty()) return x;
    std::uniform_int_distribution<int> terms(1, 4);
    std::uniform_int_distribution<int> length(1, std::max(options.max_word, 1));
    std::uniform_int_distribution<std::size_t> gen(0, m.actions.size() - 1);
    std::uniform_int_distribution<int> coeff(1, m.p - 1);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        FpMatrix word = m.actions[gen(rng)];
        const int len = length(rng);
        for (int i = 1; i < len; ++i) word = fp::matmul(word, m.actions[gen(rng)]);
        x += word.scaled(static_cast<Residue>(coeff(rng)));
    }
    return x;
}

FpMatrix single_row(const FpMatrix& m, int r) { return m.select_rows({r}); }

}  // namespace

void check_module(const FpModule& m) {
    if (m.dim < 0) throw std::invalid_argument("negative module dimension");
    for (const auto& a : m.actions) {
        if (a.modulus() != m.p || a.rows() != m.dim || a.cols() != m.dim) {
            throw std::invalid_argument("action matrix does not match the module");
        }
    }
}

FpMatrix spin(const FpModule& m, const FpMatrix& seeds) {
    EchelonBasis basis(m.p, m.dim);
    std::deque<int> queue;
    auto push = [&](std::vector<Residue> v) {
        basis.reduce(v);
        if (basis.append(v) != 0) queue.push_back(basis.size() - 1);
    };
    for (int r = 0; r < seeds.rows(); ++r) push(seeds.row_vector(r));
    while (!queue.empty() && basis.size() < m.dim) {
        const int i = queue.front();
        queue.pop_front();
        for (const auto& a : m.actions) push(fp::vec_mul(basis.row(i), a));
    }
    return fp::rref(basis.matrix()).form;
}

FpModule submodule(const FpModule& m, const FpMatrix& basis) {
    const auto pivots = leading_columns(basis);
    FpModule out{m.p, basis.rows(), {}, m.tag + "/sub"};
    for (const auto& a : m.actions) out.actions.push_back(fp::matmul(basis, a).select_cols(pivots));
    return out;
}

FpModule quotient(const FpModule& m, const FpMatrix& basis) {
    const auto pivots = leading_columns(basis);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.dim), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> rest;
    for (int c = 0; c < m.dim; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) rest.push_back(c);
    }
    const auto p = static_cast<Residue>(m.p);
    FpModule out{m.p, static_cast<int>(rest.size()), {}, m.tag + "/quot"};
    for (const auto& a : m.actions) {
        FpMatrix images = a.select_rows(rest);
        for (int r = 0; r < images.rows(); ++r) {
            Residue* u = images.row(r);
            for (int i = 0; i < basis.rows(); ++i) {
                const Residue c = u[pivots[static_cast<std::size_t>(i)]];
                if (c == 0) continue;
                const Residue* b = basis.row(i);
                const Residue neg = p - c;
                for (int j = 0; j < m.dim; ++j) u[j] = (u[j] + neg * b[j]) % p;
            }
        }
        out.actions.push_back(images.select_cols(rest));
    }
    return out;
}

FpModule transposed(const FpModule& m) {
    FpModule out{m.p, m.dim, {}, m.tag + "^T"};
    for (const auto& a : m.actions) out.actions.push_back(fp::transpose(a));
    return out;
}

SplitResult meataxe_split(const FpModule& m, std::mt19937_64& rng, const MeataxeOptions& options) {
    check_module(m);
    if (m.dim == 0) throw std::invalid_argument("zero module has no composition factors");
    if (m.dim == 1) return {true, {}};
    const FpModule mt = transposed(m);
    const FpMatrix ident = FpMatrix::identity(m.p, m.dim);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        const FpMatrix x = random_element(m, rng, options);
        for (int a = 0; a < m.p; ++a) {
            const FpMatrix theta = x - ident.scaled(static_cast<Residue>(a));
            const FpMatrix left_null = fp::nullspace(fp::transpose(theta));
            if (left_null.rows() == 0) continue;
            const FpMatrix s = spin(m, single_row(left_null, 0));
            if (s.rows() < m.dim) return {false, s};
            const FpMatrix right_null = fp::nullspace(theta);
            const FpMatrix st = spin(mt, single_row(right_null, 0));
            if (st.rows() < m.dim) return {false, fp::rref(fp::nullspace(st)).form};
            if (left_null.rows() == 1) return {true, {}};
        }
    }
    throw MeataxeCapExceeded("no split or irreducibility certificate for a module of dimension " +
                             std::to_string(m.dim) + " after " + std::to_string(options.max_attempts) +
                             " random elements");
}

namespace {

void collect_series(const FpModule& m, std::mt19937_64& rng, const MeataxeOptions& options,
                    std::vector<FpModule>& out) {
    if (m.dim == 0) return;
    SplitResult split = meataxe_split(m, rng, options);
    if (split.irreducible) {
        out.push_back(m);
        return;
    }
    collect_series(submodule(m, split.submodule), rng, options, out);
    collect_series(quotient(m, split.submodule), rng, options, out);
}

template <class F>
auto with_retries(const MeataxeOptions& options, F&& body) {
    for (int round = 0;; ++round) {
        std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(round) * 0x9E3779B97F4A7C15ULL);
        try {
            return body(rng);
        } catch (const MeataxeCapExceeded&) {
            if (round >= options.retries) throw;
        }
    }
}

}  // namespace

bool is_irreducible(const FpModule& m, const MeataxeOptions& options) {
    return with_retries(options, [&](std::mt19937_64& rng) { return meataxe_split(m, rng, options).irreducible; });
}

std::vector<FpModule> composition_series(const FpModule& m, const MeataxeOptions& options) {
    check_module(m);
    return with_retries(options, [&](std::mt19937_64& rng) {
        std::vector<FpModule> out;
        collect_series(m, rng, options, out);
        return out;
    });
}

int hom_dimension(const FpModule& a, const FpModule& b) {
    check_module(a);
    check_module(b);
    if (a.p != b.p || a.actions.size() != b.actions.size()) {
        throw std::invalid_argument("modules for different fields or generator lists");
    }
    if (a.dim == 0 || b.dim == 0) return 0;

    // Candidate images w of the first unit vector, as the rows of `space`.
    // images[j] row t is the image of basis vector j when w = space row t.
    FpMatrix space = FpMatrix::identity(b.p, b.dim);
    std::vector<FpMatrix> images;
    EchelonBasis basis(a.p, a.dim);
    std::deque<int> queue;

    auto restrict_to = [&](const FpMatrix& defect) {
        // keep combinations c of the current rows with c * defect = 0
        const FpMatrix keep = fp::nullspace(fp::transpose(defect));
        space = fp::matmul(keep, space);
        for (auto& img : images) img = fp::matmul(keep, img);
    };

    auto add = [&](std::vector<Residue> v, FpMatrix image) {
        std::vector<Residue> coeffs;
        basis.reduce(v, &coeffs);
        for (std::size_t l = 0; l < coeffs.size(); ++l) {
            if (coeffs[l] != 0) image -= images[l].scaled(coeffs[l]);
        }
        const Residue scale = basis.append(v);
        if (scale == 0) {
            if (!image.is_zero()) restrict_to(image);
            return;
        }
        images.push_back(image.scaled(scale));
        queue.push_back(basis.size() - 1);
    };

    std::vector<Residue> start(static_cast<std::size_t>(a.dim), 0);
    start[0] = 1;
    add(start, space);
    while (!queue.empty() && space.rows() > 0) {
        const int j = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < a.actions.size() && space.rows() > 0; ++i) {
            add(fp::vec_mul(basis.row(j), a.actions[i]), fp::matmul(images[static_cast<std::size_t>(j)], b.actions[i]));
        }
    }
    if (space.rows() > 0 && basis.size() < a.dim) {
        throw std::logic_error("hom_dimension: first module is not cyclic on its first basis vector");
    }
    return space.rows();
}

std::vector<int> composition_factors(const FpModule& m, const std::vector<FpModule>& library,
                                     const MeataxeOptions& options) {
    std::vector<int> counts(library.size(), 0);
    for (const auto& factor : composition_series(m, options)) {
        std::vector<std::size_t> same_dim;
        for (std::size_t i = 0; i < library.size(); ++i) {
            if (library[i].dim == factor.dim && library[i].p == factor.p) same_dim.push_back(i);
        }
        std::vector<std::size_t> matches;
        if (same_dim.size() == 1) {
            matches = same_dim;
        } else {
            for (std::size_t i : same_dim) {
                if (hom_dimension(factor, library[i]) > 0) matches.push_back(i);
            }
        }
        if (matches.size() != 1) {
            throw std::logic_error("composition factor of dimension " + std::to_string(factor.dim) + " matches " +
                                   std::to_string(matches.size()) + " library entries");
        }
        ++counts[matches.front()];
    }
    return counts;
}

}  // namespace foulkes
