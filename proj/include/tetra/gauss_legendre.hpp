#pragma once

#include <utility>
#include <vector>

namespace tetra {

/// n-point Gauss-Legendre rule on (-1, 1): nodes ascending, symmetric about 0,
/// weights positive and summing to 2. Exact for polynomials of degree <= 2n-1.
/// Throws std::invalid_argument for n == 0.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

} // namespace tetra
