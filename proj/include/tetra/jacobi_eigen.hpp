#pragma once

#include <vector>

namespace tetra {

/// Dense symmetric matrix, row-major.
struct SymmetricEigen {
    std::vector<double> eigenvalues;   // size n
    std::vector<double> eigenvectors;  // column k at [i*n + k], orthonormal
};

/// Cyclic Jacobi rotations; iterates until the off-diagonal Frobenius norm
/// drops below 1e-12 times the matrix norm. Robust and deterministic for the
/// small (<= ~40) matrices this library assembles.
SymmetricEigen jacobi_eigen(const std::vector<double>& a, int n);

} // namespace tetra
