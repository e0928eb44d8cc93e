#include "exitctl/policy.hpp"

#include <algorithm>
#include <cmath>

namespace exitctl {

double Policy::sample(const State3& x) const {
    const Grid& g = *grid;
    const auto lo = g.domain().lo;
    const auto h = g.h();
    const auto m = g.interior_n();

    // continuous coordinates on the interior lattice, clamped to its hull
    const double coords[3] = {x.x1, x.x2, x.x3};
    double t[3];
    int i0[3];
    for (int a = 0; a < 3; ++a) {
        double c = (coords[a] - lo[a]) / h[a] - 1.0; // 0 at first interior node
        c = std::clamp(c, 0.0, static_cast<double>(m[a] - 1));
        i0[a] = std::min(static_cast<int>(std::floor(c)), m[a] - 2);
        if (m[a] == 1) i0[a] = 0;
        t[a] = m[a] == 1 ? 0.0 : c - i0[a];
    }

    double acc = 0.0;
    for (int d3 = 0; d3 < 2; ++d3)
        for (int d2 = 0; d2 < 2; ++d2)
            for (int d1 = 0; d1 < 2; ++d1) {
                const int j1 = std::min(i0[0] + d1, m[0] - 1);
                const int j2 = std::min(i0[1] + d2, m[1] - 1);
                const int j3 = std::min(i0[2] + d3, m[2] - 1);
                const double w = (d1 ? t[0] : 1.0 - t[0]) *
                                 (d2 ? t[1] : 1.0 - t[1]) *
                                 (d3 ? t[2] : 1.0 - t[2]);
                acc += w * values[g.interior_index(j1 + 1, j2 + 1, j3 + 1)];
            }
    return acc;
}

Policy constant_policy(std::shared_ptr<const Grid> g, double u) {
    Policy p;
    p.values.assign(static_cast<std::size_t>(g->interior_count()), u);
    p.grid = std::move(g);
    return p;
}

} // namespace exitctl
