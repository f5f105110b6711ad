#include "foulkes/specht.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace foulkes {

using fp::FpMatrix;
using fp::Residue;

namespace {

int inversions(const std::vector<int>& v) {
    int count = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) count += v[i] > v[j] ? 1 : 0;
    }
    return count;
}

int column_length(const Tableau& t, std::size_t c) {
    int len = 0;
    while (static_cast<std::size_t>(len) < t.size() && t[static_cast<std::size_t>(len)].size() > c) ++len;
    return len;
}

/// Sorts every column upward; returns the sign of the permutation applied.
int sort_columns(Tableau& t) {
    int parity = 0;
    const std::size_t width = t.empty() ? 0 : t.front().size();
    for (std::size_t c = 0; c < width; ++c) {
        const int len = column_length(t, c);
        std::vector<int> col;
        for (int r = 0; r < len; ++r) col.push_back(t[static_cast<std::size_t>(r)][c]);
        parity += inversions(col);
        std::sort(col.begin(), col.end());
        for (int r = 0; r < len; ++r) t[static_cast<std::size_t>(r)][c] = col[static_cast<std::size_t>(r)];
    }
    return parity % 2 == 0 ? 1 : -1;
}

void require_shape(const Tableau& t, const Partition& shape) {
    if (static_cast<int>(t.size()) != shape.length()) throw std::invalid_argument("tableau has the wrong shape");
    for (int r = 0; r < shape.length(); ++r) {
        if (static_cast<int>(t[static_cast<std::size_t>(r)].size()) != shape.part(r)) {
            throw std::invalid_argument("tableau has the wrong shape");
        }
    }
}

void require_cap(int n, int cap) {
    if (cap > kOracleHardCap) throw std::invalid_argument("oracle cap above " + std::to_string(kOracleHardCap));
    if (n > cap) {
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(cap));
    }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    const int n = shape.size();
    std::vector<Tableau> out;
    Tableau t(static_cast<std::size_t>(shape.length()));
    auto place = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(t);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            auto& row = t[static_cast<std::size_t>(r)];
            const auto len = static_cast<int>(row.size());
            if (len >= shape.part(r)) continue;
            if (r > 0 && static_cast<int>(t[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
            row.push_back(next);
            self(self, next + 1);
            row.pop_back();
        }
    };
    place(place, 1);
    return out;
}

bool is_standard(const Tableau& t) {
    for (std::size_t r = 0; r < t.size(); ++r) {
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1]) return false;
            if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] > t[r + 1][c]) return false;
        }
    }
    return true;
}

std::uint64_t tabloid_key(const Tableau& t) {
    std::uint64_t key = 0;
    for (std::size_t r = 0; r < t.size(); ++r) {
        for (int x : t[r]) {
            if (x < 1 || x > 16 || r > 15) throw std::invalid_argument("tabloid key supports 16 entries and rows");
            key |= static_cast<std::uint64_t>(r) << (4 * (x - 1));
        }
    }
    return key;
}

std::vector<std::pair<std::uint64_t, int>> polytabloid(const Tableau& t) {
    std::vector<std::pair<std::uint64_t, int>> out;
    Tableau work = t;
    const std::size_t width = t.empty() ? 0 : t.front().size();
    std::vector<std::vector<int>> columns(width);
    for (std::size_t c = 0; c < width; ++c) {
        const int len = column_length(t, c);
        for (int r = 0; r < len; ++r) columns[c].push_back(t[static_cast<std::size_t>(r)][c]);
    }
    // Odometer over column permutations; each column runs through its own
    // orderings in lexicographic order starting from the entries' own order.
    auto visit = [&](auto&& self, std::size_t c, int parity) -> void {
        if (c == width) {
            out.emplace_back(tabloid_key(work), parity % 2 == 0 ? 1 : -1);
            return;
        }
        std::vector<int> col = columns[c];
        std::sort(col.begin(), col.end());
        do {
            for (std::size_t r = 0; r < col.size(); ++r) work[r][c] = col[r];
            self(self, c + 1, parity + inversions(col) + inversions(columns[c]));
        } while (std::next_permutation(col.begin(), col.end()));
    };
    visit(visit, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Straightener::Straightener(const Partition& shape, int p) : shape_(shape), p_(p), basis_(standard_tableaux(shape)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
}

std::vector<Residue> Straightener::straighten(const Tableau& t) {
    require_shape(t, shape_);
    Tableau sorted = t;
    const int sign = sort_columns(sorted);
    std::vector<Residue> out(basis_.size(), 0);
    const auto p = static_cast<Residue>(p_);
    for (const auto& [i, c] : expand(sorted)) {
        out[static_cast<std::size_t>(i)] = sign > 0 ? c : fp::sub_mod(0, c, p);
    }
    return out;
}

const std::map<int, Residue>& Straightener::expand(const Tableau& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    const auto p = static_cast<Residue>(p_);
    std::map<int, Residue> result;
    if (auto it = index_.find(t); it != index_.end()) {
        result.emplace(it->second, 1);
        return memo_.emplace(t, std::move(result)).first->second;
    }
    // First row descent t[r][c] > t[r][c+1] of a column-standard tableau.
    std::size_t dr = 0;
    std::size_t dc = 0;
    bool found = false;
    for (std::size_t r = 0; r < t.size() && !found; ++r) {
        for (std::size_t c = 0; c + 1 < t[r].size(); ++c) {
            if (t[r][c] > t[r][c + 1]) {
                dr = r;
                dc = c;
                found = true;
                break;
            }
        }
    }
    if (!found) throw std::logic_error("non-standard tableau without a row descent");

    // Garnir relation on A = column dc rows dr.., B = column dc+1 rows ..dr.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    const int len_a = column_length(t, dc);
    for (int r = static_cast<int>(dr); r < len_a; ++r) slots.emplace_back(static_cast<std::size_t>(r), dc);
    const std::size_t size_a = slots.size();
    for (std::size_t r = 0; r <= dr; ++r) slots.emplace_back(r, dc + 1);
    const std::size_t size_b = slots.size() - size_a;

    std::vector<int> old_values;
    for (auto [r, c] : slots) old_values.push_back(t[r][c]);
    std::vector<int> pool = old_values;
    std::sort(pool.begin(), pool.end());
    const int old_parity = inversions(old_values);
    std::vector<int> b_values(old_values.begin() + static_cast<std::ptrdiff_t>(size_a), old_values.end());
    std::sort(b_values.begin(), b_values.end());

    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size_b), pick.end(), true);
    do {
        std::vector<int> a_part;
        std::vector<int> b_part;
        for (std::size_t i = 0; i < pool.size(); ++i) (pick[i] ? b_part : a_part).push_back(pool[i]);
        if (b_part == b_values) continue;
        std::vector<int> new_values = a_part;
        new_values.insert(new_values.end(), b_part.begin(), b_part.end());
        Tableau moved = t;
        for (std::size_t i = 0; i < slots.size(); ++i) moved[slots[i].first][slots[i].second] = new_values[i];
        int sign = (old_parity + inversions(new_values)) % 2 == 0 ? 1 : -1;
        sign *= sort_columns(moved);
        // e_t = -sum over the other coset representatives
        sign = -sign;
        const auto& sub = expand(moved);
        for (const auto& [i, c] : sub) {
            Residue& slot = result[i];
            slot = sign > 0 ? fp::add_mod(slot, c, p) : fp::sub_mod(slot, c, p);
        }
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
    return memo_.emplace(t, std::move(result)).first->second;
}

SpechtModule specht_module(const Partition& mu, int p, int cap) {
    require_odd_prime(p);
    const int n = mu.size();
    require_cap(n, cap);
    Straightener straightener(mu, p);
    SpechtModule out{mu, straightener.basis(), {p, static_cast<int>(straightener.basis().size()), {}, "S^(" + to_display_string(mu) + ")"}, {}};
    const int dim = out.module.dim;

    for (int i = 1; i < n; ++i) {
        FpMatrix action(p, dim, dim);
        for (int j = 0; j < dim; ++j) {
            Tableau moved = out.basis[static_cast<std::size_t>(j)];
            for (auto& row : moved) {
                for (int& x : row) {
                    if (x == i) {
                        x = i + 1;
                    } else if (x == i + 1) {
                        x = i;
                    }
                }
            }
            const auto coeffs = straightener.straighten(moved);
            std::copy(coeffs.begin(), coeffs.end(), action.row(j));
        }
        out.module.actions.push_back(std::move(action));
    }

    std::vector<std::vector<std::pair<std::uint64_t, int>>> expansions;
    expansions.reserve(out.basis.size());
    for (const auto& t : out.basis) expansions.push_back(polytabloid(t));
    out.gram = FpMatrix(p, dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            const auto& a = expansions[static_cast<std::size_t>(i)];
            const auto& b = expansions[static_cast<std::size_t>(j)];
            long long sum = 0;
            std::size_t x = 0;
            std::size_t y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x].first < b[y].first) {
                    ++x;
                } else if (b[y].first < a[x].first) {
                    ++y;
                } else {
                    sum += a[x++].second * b[y++].second;
                }
            }
            out.gram.set(i, j, sum);
            out.gram.set(j, i, sum);
        }
    }
    return out;
}

FpModule simple_head(const Partition& nu, int p, int cap, bool verify) {
    if (!is_p_regular(nu, p)) throw std::invalid_argument(to_display_string(nu) + " is not p-regular");
    const SpechtModule s = specht_module(nu, p, cap);
    const FpMatrix radical = fp::nullspace(s.gram);
    FpModule out = radical.rows() == 0 ? s.module : quotient(s.module, fp::rref(radical).form);
    out.tag = "D^(" + to_display_string(nu) + ")";
    if (verify && out.dim > 0 && !is_irreducible(out)) {
        throw std::logic_error(out.tag + " failed the irreducibility test");
    }
    return out;
}

}  // namespace foulkes
