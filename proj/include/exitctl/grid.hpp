#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "exitctl/model.hpp"

namespace exitctl {

// Uniform tensor grid over the box domain. Nodes per axis include the two
// boundary layers; interior nodes are indexed lexicographically with x1
// fastest.
class Grid {
public:
    Grid() = default;
    Grid(const Domain& d, std::array<int, 3> n);

    const Domain& domain() const { return domain_; }
    std::array<int, 3> n() const { return n_; }
    std::array<double, 3> h() const { return h_; }

    int interior_count() const { return interior_count_; }
    std::array<int, 3> interior_n() const {
        return {n_[0] - 2, n_[1] - 2, n_[2] - 2};
    }

    // lattice coordinates are full-grid indices in [0, n_i); interior nodes
    // have each coordinate in [1, n_i - 1).
    int interior_index(int i1, int i2, int i3) const {
        return (i1 - 1) + (n_[0] - 2) * ((i2 - 1) + (n_[1] - 2) * (i3 - 1));
    }
    std::array<int, 3> lattice_of(int interior_idx) const {
        const int m1 = n_[0] - 2, m2 = n_[1] - 2;
        return {interior_idx % m1 + 1, (interior_idx / m1) % m2 + 1,
                interior_idx / (m1 * m2) + 1};
    }
    bool is_interior(int i1, int i2, int i3) const {
        return i1 >= 1 && i1 < n_[0] - 1 && i2 >= 1 && i2 < n_[1] - 1 &&
               i3 >= 1 && i3 < n_[2] - 1;
    }

    State3 node(int i1, int i2, int i3) const {
        return {domain_.lo[0] + i1 * h_[0], domain_.lo[1] + i2 * h_[1],
                domain_.lo[2] + i3 * h_[2]};
    }
    State3 node(int interior_idx) const {
        const auto l = lattice_of(interior_idx);
        return node(l[0], l[1], l[2]);
    }

private:
    Domain domain_{};
    std::array<int, 3> n_{0, 0, 0};
    std::array<double, 3> h_{0, 0, 0};
    int interior_count_ = 0;
};

inline Grid build_grid(const Domain& d, std::array<int, 3> n) {
    return Grid(d, n);
}

} // namespace exitctl
