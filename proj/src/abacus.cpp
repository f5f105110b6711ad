#include "foulkes/abacus.hpp"

#include <algorithm>
#include <stdexcept>

namespace foulkes {

Abacus::Abacus(int p, std::vector<int> beads) : p_(p), beads_(std::move(beads)) {
    if (p_ < 2) throw std::invalid_argument("abacus needs at least two runners");
    std::sort(beads_.begin(), beads_.end());
    for (std::size_t i = 0; i < beads_.size(); ++i) {
        if (beads_[i] < 0) throw std::invalid_argument("negative bead position");
        if (i > 0 && beads_[i] == beads_[i - 1]) throw std::invalid_argument("repeated bead position");
    }
}

Abacus Abacus::from_partition(const Partition& lambda, int p, int nbeads) {
    return Abacus(p, beta_set(lambda, nbeads));
}

Abacus Abacus::from_partition(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("abacus needs at least two runners");
    const int nbeads = (lambda.length() + p - 1) / p * p;
    return from_partition(lambda, p, nbeads);
}

bool Abacus::occupied(int position) const {
    return std::binary_search(beads_.begin(), beads_.end(), position);
}

int Abacus::runner_count(int r) const {
    return static_cast<int>(std::count_if(beads_.begin(), beads_.end(), [&](int q) { return q % p_ == r; }));
}

Partition Abacus::to_partition() const { return from_beta_set(beads_); }

Abacus Abacus::normalized() const { return from_partition(to_partition(), p_); }

std::vector<Abacus> Abacus::bead_down_moves() const {
    std::vector<Abacus> out;
    for (std::size_t i = 0; i < beads_.size(); ++i) {
        const int target = beads_[i] + p_;
        if (occupied(target)) continue;
        auto moved = beads_;
        moved[i] = target;
        out.emplace_back(p_, std::move(moved));
    }
    return out;
}

std::vector<Abacus> Abacus::bead_up_moves() const {
    std::vector<Abacus> out;
    for (std::size_t i = 0; i < beads_.size(); ++i) {
        const int target = beads_[i] - p_;
        if (target < 0 || occupied(target)) continue;
        auto moved = beads_;
        moved[i] = target;
        out.emplace_back(p_, std::move(moved));
    }
    return out;
}

std::string Abacus::pretty() const {
    const int last = beads_.empty() ? 0 : beads_.back();
    const int rows = last / p_ + 1;
    std::string out;
    for (int row = 0; row < rows; ++row) {
        for (int r = 0; r < p_; ++r) {
            if (r > 0) out += ' ';
            out += occupied(row * p_ + r) ? "●" : "·";
        }
        out += '\n';
    }
    return out;
}

Partition bound_family_core(int p, int e) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("bound_family_core needs an odd p >= 3");
    if (e < 0) throw std::invalid_argument("bound_family_core needs e >= 0");
    std::vector<int> beads;
    for (int r = 0; r < p; ++r) {
        int count = 1;
        if (r == 1) count = 2;
        if (r == p - 1) count = e + 1;
        for (int row = 0; row < count; ++row) beads.push_back(row * p + r);
    }
    return Abacus(p, std::move(beads)).to_partition();
}

}  // namespace foulkes
