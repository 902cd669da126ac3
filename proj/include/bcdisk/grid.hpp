#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "bicomplex.hpp"

namespace bcdisk {

/// Polar sampling surface: radii in (0,1), uniform angles on [0, 2 pi).
struct PolarGrid {
    std::vector<double> radii;
    int n_theta = 256;

    double angle(int t) const { return 2.0 * std::numbers::pi * t / n_theta; }
    cplx point(int i, int t) const { return std::polar(radii[i], angle(t)); }

    void validate() const {
        if (n_theta <= 0) throw std::invalid_argument("n_theta must be positive");
        for (std::size_t i = 0; i < radii.size(); ++i) {
            if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw std::invalid_argument("grid radius outside (0,1)");
            if (i > 0 && !(radii[i] > radii[i - 1])) throw std::invalid_argument("grid radii must increase");
        }
    }
};

/// Cell-centred radii (i + 1/2) / n_r, the default 64 x 256 layout.
inline PolarGrid default_grid(int n_r = 64, int n_theta = 256) {
    PolarGrid g;
    g.n_theta = n_theta;
    for (int i = 0; i < n_r; ++i) g.radii.push_back((i + 0.5) / n_r);
    return g;
}

template <class V>
struct GridField {
    PolarGrid grid;
    std::vector<V> values;  // row-major, radius index outermost

    const V& at(int i, int t) const { return values[static_cast<std::size_t>(i) * grid.n_theta + t]; }
};

template <class F>
auto sample(const F& f, const PolarGrid& grid) {
    grid.validate();
    using V = std::decay_t<decltype(f(cplx{}))>;
    GridField<V> out{grid, {}};
    out.values.reserve(grid.radii.size() * grid.n_theta);
    for (std::size_t i = 0; i < grid.radii.size(); ++i)
        for (int t = 0; t < grid.n_theta; ++t) out.values.push_back(f(grid.point(static_cast<int>(i), t)));
    return out;
}

}  // namespace bcdisk
