#pragma once

#include "tetra/field.hpp"
#include "tetra/grid.hpp"

#include <vector>

namespace tetra {

/// Real spherical-harmonic analysis/synthesis with exact Gauss-Legendre
/// quadrature and de-aliased pointwise products.
///
/// The grid carried by a transform always satisfies the cubic de-aliasing
/// contract n_lat >= ceil(3 L / 2) + 1, n_lon >= 3 L + 1, so products of two
/// band-limited fields analyzed at degrees <= L are exact. Longitude sums are
/// direct (no FFT). All methods are const and safe to call concurrently.
class SphereTransform {
public:
    /// Default grid sizing for the band limit (n_lat rounded up to even,
    /// n_lon to a multiple of 4; L = 20 gives 32 x 64).
    explicit SphereTransform(int l_max);

    /// Custom grid; throws ResolutionError if the de-aliasing contract fails.
    SphereTransform(int l_max, int n_lat, int n_lon);

    int l_max() const { return l_max_; }
    const SphericalGrid& grid() const { return grid_; }

    /// Pointwise values sum a_{l,m} Y_l^m. Throws ResolutionError if the
    /// field's band limit exceeds the transform's.
    GridField synthesize(const SpectralField& f) const;

    /// Harmonic coefficients of grid samples up to l_max_out; exact for
    /// band-limited inputs, truncation otherwise.
    SpectralField analyze(const GridField& v, int l_max_out) const;

    /// Surface integral of grid samples.
    double integrate(const GridField& v) const;

    /// Quadrature inner product of two grid fields.
    double integrate_product(const GridField& a, const GridField& b) const;

    /// Exact synthesis at an arbitrary point (x3 = sin theta, phi).
    double point_value(const SpectralField& f, double x3, double phi) const;

    /// Coefficients of the pointwise product f*g, band-limited to
    /// min(f.l_max + g.l_max, l_max()); retained coefficients are exact.
    SpectralField product(const SpectralField& f, const SpectralField& g) const;

    /// Spherical Jacobian J(f,g) = (d_phi f d_theta g - d_theta f d_phi g)/cos(theta),
    /// evaluated pseudospectrally.
    SpectralField jacobian(const SpectralField& f, const SpectralField& g) const;

    /// Grid samples of the longitude derivative of f.
    GridField synthesize_dphi(const SpectralField& f) const;

    /// Grid samples of the latitude derivative of f.
    GridField synthesize_dtheta(const SpectralField& f) const;

private:
    void build_tables();
    GridField synthesize_tables(const SpectralField& f, const std::vector<double>& tables) const;

    int l_max_;
    SphericalGrid grid_;
    std::vector<double> plm_;    // [i_lat * tri_size + tri_index(l,m)]
    std::vector<double> dplm_;   // same layout, d/dtheta
    std::vector<double> cos_m_;  // [m * n_lon + j]
    std::vector<double> sin_m_;
};

} // namespace tetra
