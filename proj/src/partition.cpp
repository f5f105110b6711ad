#include "foulkes/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace foulkes {

namespace {

int checked_add(int a, int b) {
    int out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("partition arithmetic overflow");
    }
    return out;
}

std::vector<Partition> sorted_desc(std::vector<Partition> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = checked_add(size_, parts_[i]);
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    for (int x : parts) {
        if (x < 0) throw std::invalid_argument("negative part");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (lambda.empty()) return {};
    cols.reserve(static_cast<std::size_t>(lambda.part(0)));
    for (int c = 0; c < lambda.part(0); ++c) {
        int len = 0;
        while (len < lambda.length() && lambda.part(len) > c) ++len;
        cols.push_back(len);
    }
    return Partition(std::move(cols));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw std::invalid_argument("dominance compares partitions of the same size");
    }
    int a = 0;
    int b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

int odd_parts_count(const Partition& lambda) {
    return static_cast<int>(
        std::count_if(lambda.parts().begin(), lambda.parts().end(), [](int x) { return x % 2 != 0; }));
}

bool is_p_regular(const Partition& lambda, int p) {
    int run = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        run = (i > 0 && lambda.part(i) == lambda.part(i - 1)) ? run + 1 : 1;
        if (run >= p) return false;
    }
    return true;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_odd_prime(int p) {
    if (p == 2 || !is_prime(p)) {
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    }
}

std::vector<int> beta_set(const Partition& lambda, int nbeads) {
    if (nbeads < lambda.length()) {
        throw std::invalid_argument("bead count smaller than the number of parts");
    }
    std::vector<int> beads(static_cast<std::size_t>(nbeads));
    for (int i = 0; i < nbeads; ++i) {
        beads[static_cast<std::size_t>(i)] = checked_add(lambda.part(i), nbeads - 1 - i);
    }
    return beads;
}

Partition from_beta_set(std::vector<int> beads) {
    std::sort(beads.begin(), beads.end(), std::greater<>());
    const int n = static_cast<int>(beads.size());
    std::vector<int> parts;
    for (int j = 0; j < n; ++j) {
        const int b = beads[static_cast<std::size_t>(j)];
        if (b < 0) throw std::invalid_argument("negative bead position");
        if (j > 0 && b == beads[static_cast<std::size_t>(j - 1)]) {
            throw std::invalid_argument("repeated bead position");
        }
        const int part = b - (n - 1 - j);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

CoreAndWeight p_core(const Partition& lambda, int p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    const int nbeads = lambda.length();
    const auto beads = beta_set(lambda, nbeads);
    // Push every bead to the top of its runner; the total number of rows
    // travelled is the weight.
    std::vector<int> count(static_cast<std::size_t>(p), 0);
    long long rows = 0;
    for (int b : beads) {
        ++count[static_cast<std::size_t>(b % p)];
        rows += b / p;
    }
    std::vector<int> pushed;
    long long top_rows = 0;
    for (int r = 0; r < p; ++r) {
        for (int j = 0; j < count[static_cast<std::size_t>(r)]; ++j) {
            pushed.push_back(j * p + r);
            top_rows += j;
        }
    }
    return {from_beta_set(std::move(pushed)), static_cast<int>(rows - top_rows)};
}

bool is_p_core(const Partition& lambda, int p) { return p_core(lambda, p).weight == 0; }

std::vector<Partition> add_rim_hook_all(const Partition& lambda, int p) {
    const int nbeads = lambda.length() + p;
    auto beads = beta_set(lambda, nbeads);
    const std::set<int> occupied(beads.begin(), beads.end());
    std::vector<Partition> out;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        const int target = checked_add(beads[i], p);
        if (occupied.contains(target)) continue;
        auto moved = beads;
        moved[i] = target;
        out.push_back(from_beta_set(std::move(moved)));
    }
    return sorted_desc(std::move(out));
}

std::vector<Partition> remove_rim_hook_all(const Partition& lambda, int p) {
    auto beads = beta_set(lambda, lambda.length());
    const std::set<int> occupied(beads.begin(), beads.end());
    std::vector<Partition> out;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        const int target = beads[i] - p;
        if (target < 0 || occupied.contains(target)) continue;
        auto moved = beads;
        moved[i] = target;
        out.push_back(from_beta_set(std::move(moved)));
    }
    return sorted_desc(std::move(out));
}

PartitionStream::PartitionStream(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
}

std::optional<Partition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ > 0) state_ = {n_};
        if (n_ == 0) done_ = true;
        return Partition(state_);
    }
    // Rightmost part larger than 1 is decreased; the freed amount plus all
    // trailing 1s is refilled greedily with parts no larger than it.
    int idx = static_cast<int>(state_.size()) - 1;
    int ones = 0;
    while (idx >= 0 && state_[static_cast<std::size_t>(idx)] == 1) {
        ++ones;
        --idx;
    }
    if (idx < 0) {
        done_ = true;
        return std::nullopt;
    }
    const int v = --state_[static_cast<std::size_t>(idx)];
    int rest = ones + 1;
    state_.resize(static_cast<std::size_t>(idx) + 1);
    while (rest > 0) {
        const int take = std::min(v, rest);
        state_.push_back(take);
        rest -= take;
    }
    return Partition(state_);
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for (auto& lambda : partitions_of(n)) out.push_back(lambda);
    return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int value = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end || value < 0) {
        throw std::invalid_argument("malformed partition \"" + std::string(whole) + "\"");
    }
    return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (s.empty()) return {};
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string_view item =
            s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const std::size_t caret = item.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_int(item, text));
        } else {
            const int value = parse_int(item.substr(0, caret), text);
            const int reps = parse_int(item.substr(caret + 1), text);
            if (reps > 100000) throw std::invalid_argument("exponent too large in partition");
            parts.insert(parts.end(), static_cast<std::size_t>(reps), value);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Partition::from_unsorted(std::move(parts));
}

std::string to_string(const Partition& lambda) {
    std::string out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(lambda.part(i));
    }
    return out;
}

std::string to_display_string(const Partition& lambda) {
    if (lambda.empty()) return "()";
    std::string out;
    int i = 0;
    while (i < lambda.length()) {
        int j = i;
        while (j < lambda.length() && lambda.part(j) == lambda.part(i)) ++j;
        const int run = j - i;
        if (!out.empty()) out += ',';
        if (run >= 4) {
            out += std::to_string(lambda.part(i)) + "^" + std::to_string(run);
        } else {
            for (int r = 0; r < run; ++r) {
                if (r > 0) out += ',';
                out += std::to_string(lambda.part(i));
            }
        }
        i = j;
    }
    return out;
}

}  // namespace foulkes
