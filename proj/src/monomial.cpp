#include "foulkes/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace foulkes {

namespace {

bool is_power_of(std::uint64_t n, int p) {
    if (n == 0) return false;
    while (n % static_cast<std::uint64_t>(p) == 0) n /= static_cast<std::uint64_t>(p);
    return n == 1;
}

std::uint64_t ipow(int base, int e) {
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(base), &out)) {
            throw std::overflow_error("power overflows 64 bits");
        }
    }
    return out;
}

/// z_j = (p(j-1)+1, ..., pj)
std::vector<int> block_cycle(int j, int p) {
    std::vector<int> c(static_cast<std::size_t>(p));
    std::iota(c.begin(), c.end(), p * (j - 1) + 1);
    return c;
}

void require_points(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("m and k must be nonnegative");
    if (2 * m + k > kMaxOmegaPoints) {
        throw std::invalid_argument("enumeration limited to " + std::to_string(kMaxOmegaPoints) + " points");
    }
}

}  // namespace

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int x : images) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) {
            throw std::invalid_argument("image list is not a permutation");
        }
        seen[static_cast<std::size_t>(x - 1)] = true;
    }
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation out(n);
    for (const auto& c : cycles) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        std::set<int> distinct(c.begin(), c.end());
        if (distinct.size() != c.size()) throw std::invalid_argument("cycle repeats a point");
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 1 || c[i] > n) throw std::invalid_argument("cycle point out of range");
            images[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
        }
        out = out * from_images(std::move(images));
    }
    return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
    const int n = std::max(degree(), other.degree());
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = other((*this)(i));
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (int i = 1; i <= degree(); ++i) images[static_cast<std::size_t>((*this)(i) - 1)] = i;
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::extended(int n) const {
    if (n < degree()) throw std::invalid_argument("cannot shrink a permutation");
    Permutation out(n);
    std::copy(images_.begin(), images_.end(), out.images_.begin());
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i) {
        if ((*this)(i) != i) return false;
    }
    return true;
}

std::uint64_t Permutation::order() const {
    std::uint64_t out = 1;
    const CycleType type = cycle_type();
    for (int l : type.parts()) out = std::lcm(out, static_cast<std::uint64_t>(l));
    return out;
}

CycleType Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)] || (*this)(i) == i) continue;
        out += "(";
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            if (j != i) out += ",";
            out += std::to_string(j);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::vector<int> OmegaElement::partner() const {
    std::vector<int> out(static_cast<std::size_t>(degree()), 0);
    for (auto [a, b] : pairs) {
        out[static_cast<std::size_t>(a - 1)] = b;
        out[static_cast<std::size_t>(b - 1)] = a;
    }
    return out;
}

Permutation OmegaElement::involution() const {
    std::vector<int> images(static_cast<std::size_t>(degree()));
    std::iota(images.begin(), images.end(), 1);
    for (auto [a, b] : pairs) {
        images[static_cast<std::size_t>(a - 1)] = b;
        images[static_cast<std::size_t>(b - 1)] = a;
    }
    return Permutation::from_images(std::move(images));
}

std::uint64_t omega_count(int m, int k) {
    if (m < 0 || k < 0) return 0;
    std::uint64_t out = 1;
    for (int x = 2 * m - 1; x > 1; x -= 2) out *= static_cast<std::uint64_t>(x);
    // C(2m + k, k)
    std::uint64_t binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * static_cast<std::uint64_t>(2 * m + i) / static_cast<std::uint64_t>(i);
    return out * binom;
}

void for_each_omega(int m, int k, const std::function<bool(const OmegaElement&)>& visit) {
    require_points(m, k);
    const int n = 2 * m + k;
    OmegaElement current;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    bool stopped = false;

    auto match = [&](auto&& self) -> void {
        int first = 1;
        while (first <= n && used[static_cast<std::size_t>(first)]) ++first;
        if (first > n) {
            if (!visit(current)) stopped = true;
            return;
        }
        used[static_cast<std::size_t>(first)] = true;
        for (int j = first + 1; j <= n && !stopped; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            current.pairs.emplace_back(first, j);
            self(self);
            current.pairs.pop_back();
            used[static_cast<std::size_t>(j)] = false;
        }
        used[static_cast<std::size_t>(first)] = false;
    };

    auto choose_tail = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.tail.size()) == k) {
            match(match);
            return;
        }
        const int needed = k - static_cast<int>(current.tail.size());
        for (int x = next; x <= n - needed + 1 && !stopped; ++x) {
            used[static_cast<std::size_t>(x)] = true;
            current.tail.push_back(x);
            self(self, x + 1);
            current.tail.pop_back();
            used[static_cast<std::size_t>(x)] = false;
        }
    };
    choose_tail(choose_tail, 1);
}

std::vector<OmegaElement> enumerate_omega(int m, int k) {
    std::vector<OmegaElement> out;
    for_each_omega(m, k, [&](const OmegaElement& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

PSubgroupSpec::PSubgroupSpec(std::string name, int p, int degree, std::vector<Permutation> generators)
    : name_(std::move(name)), p_(p), degree_(degree), generators_(std::move(generators)) {
    require_odd_prime(p);
    for (auto& g : generators_) {
        if (g.degree() > degree_) throw std::invalid_argument("generator moves points beyond the degree");
        g = g.extended(degree_);
        if (!is_power_of(g.order(), p_)) {
            throw std::invalid_argument("generator " + g.to_cycle_string() + " is not a p-element");
        }
    }
    try {
        if (!is_power_of(order(), p_)) throw std::invalid_argument("generated group is not a p-group");
    } catch (const std::length_error&) {
        // too large to close; generators were checked individually
    }
}

PSubgroupSpec PSubgroupSpec::trivial(int p, int degree) { return {"trivial", p, degree, {}}; }

PSubgroupSpec PSubgroupSpec::rotation(int r, int p, int degree) {
    std::vector<std::vector<int>> cycles;
    for (int j = 1; j <= r; ++j) cycles.push_back(block_cycle(j, p));
    return {"R_" + std::to_string(r), p, degree, {Permutation::from_cycles(degree, cycles)}};
}

PSubgroupSpec PSubgroupSpec::base(int r, int p, int degree) {
    std::vector<Permutation> gens;
    for (int j = 1; j <= r; ++j) gens.push_back(Permutation::from_cycles(degree, {block_cycle(j, p)}));
    return {"C_" + std::to_string(r), p, degree, std::move(gens)};
}

PSubgroupSpec PSubgroupSpec::elementary(int t, int r, int p, int degree) {
    if (2 * t > r) throw std::invalid_argument("need 2t <= r");
    std::vector<Permutation> gens;
    for (int j = 1; j <= t; ++j) {
        gens.push_back(Permutation::from_cycles(degree, {block_cycle(j, p), block_cycle(t + j, p)}));
    }
    for (int j = 2 * t + 1; j <= r; ++j) gens.push_back(Permutation::from_cycles(degree, {block_cycle(j, p)}));
    return {"E_" + std::to_string(t), p, degree, std::move(gens)};
}

PSubgroupSpec PSubgroupSpec::vertex(int t, int r, int p, int degree) {
    if (2 * t > r) throw std::invalid_argument("need 2t <= r");
    if (r * p > degree) throw std::invalid_argument("rp exceeds the degree");
    std::vector<Permutation> gens;
    const int half = t * p;
    for (const auto& g : sylow_generators(half, p, 0, half)) {
        // g acting on {1..tp} and the same permutation on {tp+1..2tp}
        std::vector<int> images(static_cast<std::size_t>(degree));
        std::iota(images.begin(), images.end(), 1);
        for (int i = 1; i <= half; ++i) {
            images[static_cast<std::size_t>(i - 1)] = g(i);
            images[static_cast<std::size_t>(half + i - 1)] = half + g(i);
        }
        gens.push_back(Permutation::from_images(std::move(images)));
    }
    for (auto& g : sylow_generators((r - 2 * t) * p, p, 2 * half, degree)) gens.push_back(std::move(g));
    return {"Q_" + std::to_string(t), p, degree, std::move(gens)};
}

std::vector<Permutation> sylow_generators(int count, int p, int offset, int degree) {
    std::vector<Permutation> gens;
    int start = offset;
    // Base-p digits of count, largest blocks first.
    std::vector<int> powers{1};
    while (powers.back() * p <= count) powers.push_back(powers.back() * p);
    int remaining = count;
    for (auto it = powers.rbegin(); it != powers.rend(); ++it) {
        const int size = *it;
        while (remaining >= size) {
            // iterated wreath product on {start+1, ..., start+size}
            for (int sub = p; sub <= size; sub *= p) {
                const int step = sub / p;
                std::vector<int> images(static_cast<std::size_t>(degree));
                std::iota(images.begin(), images.end(), 1);
                for (int i = 0; i < sub; ++i) {
                    images[static_cast<std::size_t>(start + i)] = start + (i + step) % sub + 1;
                }
                gens.push_back(Permutation::from_images(std::move(images)));
            }
            start += size;
            remaining -= size;
        }
    }
    return gens;
}

std::uint64_t PSubgroupSpec::order(std::uint64_t limit) const {
    std::set<Permutation> seen{Permutation(degree_)};
    std::vector<Permutation> frontier{Permutation(degree_)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators_) {
                Permutation y = x * g;
                if (seen.insert(y).second) {
                    if (seen.size() > limit) throw std::length_error("group closure exceeds limit");
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

PSubgroupSpec PSubgroupSpec::conjugate(const Permutation& x) const {
    const Permutation xe = x.extended(std::max(x.degree(), degree_));
    if (xe.degree() != degree_) throw std::invalid_argument("conjugator degree exceeds group degree");
    const Permutation xi = xe.inverse();
    std::vector<Permutation> gens;
    for (const auto& g : generators_) gens.push_back(xi * g * xe);
    return {name_ + "^x", p_, degree_, std::move(gens)};
}

PSubgroupSpec PSubgroupSpec::with_generators(const std::vector<Permutation>& extra) const {
    std::vector<Permutation> gens = generators_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return {name_ + "+", p_, degree_, std::move(gens)};
}

bool is_fixed_by(const OmegaElement& omega, const std::vector<Permutation>& generators) {
    const auto partner = omega.partner();
    const int n = omega.degree();
    for (const auto& g : generators) {
        for (auto [a, b] : omega.pairs) {
            const int ga = g(a);
            const int gb = g(b);
            if (ga > n || gb > n || partner[static_cast<std::size_t>(ga - 1)] != gb) return false;
        }
    }
    return true;
}

std::vector<OmegaElement> fixed_points(int m, int k, const PSubgroupSpec& q) {
    if (q.degree() > 2 * m + k) throw std::invalid_argument("group degree exceeds 2m + k");
    std::vector<OmegaElement> out;
    for_each_omega(m, k, [&](const OmegaElement& w) {
        if (is_fixed_by(w, q.generators())) out.push_back(w);
        return true;
    });
    return out;
}

std::uint64_t fixed_point_count(int m, int k, const PSubgroupSpec& q) {
    if (q.degree() > 2 * m + k) throw std::invalid_argument("group degree exceeds 2m + k");
    std::uint64_t count = 0;
    for_each_omega(m, k, [&](const OmegaElement& w) {
        if (is_fixed_by(w, q.generators())) ++count;
        return true;
    });
    return count;
}

std::vector<int> t_range(int m, int k, int r, int p) {
    std::vector<int> out;
    for (int t = 0; 2 * t <= r; ++t) {
        if (t * p <= m && (r - 2 * t) * p <= k) out.push_back(t);
    }
    return out;
}

std::vector<int> orbit_pairing(const OmegaElement& omega, int r, int p) {
    const auto partner = omega.partner();
    if (r * p > omega.degree()) throw std::invalid_argument("rp exceeds the number of points");
    auto orbit_of = [p](int x) { return (x - 1) / p + 1; };
    std::vector<int> out(static_cast<std::size_t>(r), 0);
    for (int j = 1; j <= r; ++j) {
        int target = -1;
        for (int x = p * (j - 1) + 1; x <= p * j; ++x) {
            const int y = partner[static_cast<std::size_t>(x - 1)];
            const int o = y == 0 ? 0 : (y > r * p ? -2 : orbit_of(y));
            if (o == -2) throw std::invalid_argument("orbit paired outside the first rp points");
            if (target == -1) target = o;
            if (o != target) throw std::invalid_argument("orbit is not paired with a single orbit");
        }
        out[static_cast<std::size_t>(j - 1)] = target;
    }
    return out;
}

std::vector<FixedPointStratum> stratify(int m, int k, int r, int p) {
    require_odd_prime(p);
    if (r < 0 || r * p > 2 * m + k) throw std::invalid_argument("need 0 <= rp <= 2m + k");
    const PSubgroupSpec rot = PSubgroupSpec::rotation(r, p, 2 * m + k);
    std::vector<FixedPointStratum> strata;
    for (int t = 0; 2 * t <= r; ++t) strata.push_back({t, {}});
    for_each_omega(m, k, [&](const OmegaElement& w) {
        if (!is_fixed_by(w, rot.generators())) return true;
        const auto pairing = orbit_pairing(w, r, p);
        const auto paired = std::count_if(pairing.begin(), pairing.end(), [](int o) { return o != 0; });
        if (paired % 2 != 0) throw std::logic_error("odd number of paired orbits");
        strata[static_cast<std::size_t>(paired / 2)].elements.push_back(w);
        return true;
    });
    return strata;
}

std::uint64_t stratum_size_predicted(int m, int k, int r, int t, int p) {
    const int inner_m = t * p;
    const int inner_k = (r - 2 * t) * p;
    if (inner_k < 0 || m - inner_m < 0 || k - inner_k < 0) return 0;
    const std::uint64_t inner = fixed_point_count(inner_m, inner_k, PSubgroupSpec::rotation(r, p, r * p));
    return inner * omega_count(m - inner_m, k - inner_k);
}

StratumOrbitCount stratum_orbit_count(int t, int r, int p) {
    require_odd_prime(p);
    if (t < 0 || 2 * t > r) throw std::invalid_argument("need 0 <= 2t <= r");
    const int m = t * p;
    const int k = (r - 2 * t) * p;
    std::vector<int> h_star(static_cast<std::size_t>(r), 0);
    for (int j = 1; j <= t; ++j) {
        h_star[static_cast<std::size_t>(j - 1)] = t + j;
        h_star[static_cast<std::size_t>(t + j - 1)] = j;
    }
    const PSubgroupSpec rot = PSubgroupSpec::rotation(r, p, r * p);
    const PSubgroupSpec ele = PSubgroupSpec::elementary(t, r, p, r * p);
    StratumOrbitCount out;
    out.expected = ipow(p, t);
    for_each_omega(m, k, [&](const OmegaElement& w) {
        const bool by_rot = is_fixed_by(w, rot.generators());
        const bool by_ele = is_fixed_by(w, ele.generators());
        if ((by_rot || by_ele) && orbit_pairing(w, r, p) == h_star) {
            out.rotation_fixed += by_rot ? 1 : 0;
            out.elementary_fixed += by_ele ? 1 : 0;
        }
        return true;
    });
    return out;
}

int legendre(int n, int p) {
    int out = 0;
    for (long q = p; q <= n; q *= p) out += static_cast<int>(n / q);
    return out;
}

std::uint64_t vertex_order(int t, int r, int p) {
    require_odd_prime(p);
    if (t < 0 || 2 * t > r) throw std::invalid_argument("need 0 <= 2t <= r");
    return ipow(p, legendre(t * p, p) + legendre((r - 2 * t) * p, p));
}

}  // namespace foulkes
