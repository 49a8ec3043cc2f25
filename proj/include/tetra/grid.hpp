#pragma once

#include <vector>

namespace tetra {

/// Gauss-Legendre x equiangular-longitude quadrature grid on the unit sphere.
/// Latitude nodes are stored as x = sin(theta) in (-1, 1), ascending; weights
/// sum to 2. Longitudes are phi_j = 2 pi j / n_lon, each with weight 2 pi / n_lon.
struct SphericalGrid {
    int n_lat = 0;
    int n_lon = 0;
    std::vector<double> nodes;   // sin(theta)
    std::vector<double> weights; // latitude quadrature weights
};

/// Pointwise real samples on a SphericalGrid, stored row-major (lat, lon).
struct GridField {
    const SphericalGrid* grid = nullptr;
    std::vector<double> values;

    GridField() = default;
    explicit GridField(const SphericalGrid& g)
        : grid(&g), values(static_cast<size_t>(g.n_lat) * g.n_lon, 0.0)
    {
    }

    double& at(int i, int j) { return values[static_cast<size_t>(i) * grid->n_lon + j]; }
    double at(int i, int j) const { return values[static_cast<size_t>(i) * grid->n_lon + j]; }
};

} // namespace tetra
