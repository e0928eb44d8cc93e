#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "exitctl/grid.hpp"

namespace exitctl {

// Stationary Markov control on the grid: one value per interior node.
// Between nodes the control is sampled by trilinear interpolation (clamped
// to the interior lattice hull).
struct Policy {
    std::shared_ptr<const Grid> grid;
    std::vector<double> values; // size = grid->interior_count()

    double at_node(int interior_idx) const { return values[interior_idx]; }
    double sample(const State3& x) const;
};

Policy constant_policy(std::shared_ptr<const Grid> g, double u);

// Control applied along a path: either a constant value or a grid policy.
using Control = std::variant<double, Policy>;

inline double control_at(const Control& c, const State3& x) {
    if (const double* u = std::get_if<double>(&c)) return *u;
    return std::get<Policy>(c).sample(x);
}

inline double control_at_node(const Control& c, int interior_idx) {
    if (const double* u = std::get_if<double>(&c)) return *u;
    return std::get<Policy>(c).at_node(interior_idx);
}

} // namespace exitctl
