#pragma once

#include <vector>

namespace tetra {

/// Index into a packed lower-triangular (l, m) table, m >= 0.
inline int tri_index(int l, int m) { return l * (l + 1) / 2 + m; }

/// Number of (l, m>=0) pairs up to degree l_max inclusive.
inline int tri_size(int l_max) { return (l_max + 1) * (l_max + 2) / 2; }

/// Fully normalized associated Legendre functions Pbar_l^m(x) for all
/// 0 <= m <= l <= l_max at a single point x = sin(latitude), packed by
/// tri_index. Normalization: int_{-1}^{1} Pbar_l^m(x)^2 dx = 1/(2*pi), so that
/// the real spherical harmonics built from them are orthonormal on the sphere.
/// Condon-Shortley phase excluded. Stable for l_max well beyond 100.
void legendre_row(int l_max, double x, std::vector<double>& out);

/// Latitude derivatives d/dtheta Pbar_l^m(sin theta) at x = sin theta,
/// same packing as legendre_row. Requires the values from legendre_row.
/// Valid only for |x| < 1 (interior quadrature nodes).
void legendre_row_dtheta(int l_max, double x, const std::vector<double>& plm,
                         std::vector<double>& out);

} // namespace tetra
