#include "exitctl/grid.hpp"

namespace exitctl {

Grid::Grid(const Domain& d, std::array<int, 3> n) : domain_(d), n_(n) {
    for (int i = 0; i < 3; ++i) {
        if (n[i] < 3)
            throw std::invalid_argument(
                "grid needs at least 3 nodes per axis (no interior otherwise)");
        if (!(d.lo[i] < d.hi[i]))
            throw std::invalid_argument("domain box has empty interior");
        h_[i] = (d.hi[i] - d.lo[i]) / (n[i] - 1);
    }
    interior_count_ = (n[0] - 2) * (n[1] - 2) * (n[2] - 2);
}

} // namespace exitctl
