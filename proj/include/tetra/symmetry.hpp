#pragma once

#include "tetra/field.hpp"
#include "tetra/transform.hpp"

#include <array>
#include <vector>

namespace tetra {

/// 3x3 rotation matrix, row-major.
using Rotation = std::array<double, 9>;

/// The 12 orientation-preserving rotations of the tetrahedron inscribed in
/// the cube: identity, +-120 deg about the four cube diagonals, 180 deg about
/// the coordinate axes.
struct RotationGroup {
    std::vector<Rotation> elements;
};

RotationGroup tetrahedral_group();

/// Orthonormal basis of the tetrahedrally invariant subspace X_T up to l_max,
/// grouped by degree.
struct InvariantBasis {
    int l_max = 0;
    bool zero_mean = false;
    std::vector<SpectralField> vectors;
    std::vector<int> degree; // degree[i] = l of vectors[i]
    int size() const { return static_cast<int>(vectors.size()); }
};

/// Multiplicity of the trivial representation of T in the degree-l harmonics:
/// m_l = (1/12)[chi_l(0) + 8 chi_l(2 pi/3) + 3 chi_l(pi)].
int invariant_dimension(int l);

/// Unit-norm l=3 tetrahedral harmonic, sqrt(105/4 pi) * xyz; positive on the
/// x=y=z>0 octant. In this convention it is exactly Y_{3,-2}.
SpectralField y_star();

/// Group-average projector onto X_T and the invariant basis builder.
/// Projection works in grid space: sample points are rotated and the field is
/// evaluated there by exact spectral synthesis, then re-analyzed.
class TetraProjector {
public:
    explicit TetraProjector(const SphereTransform& transform);

    const RotationGroup& group() const { return group_; }

    /// P f = (1/12) sum_g f(g^{-1} x), idempotent and self-adjoint.
    SpectralField project(const SpectralField& f) const;

    /// Orthonormal basis of X_T up to l_max (zero_mean drops l = 0), built per
    /// degree by projecting the standard harmonics and orthonormalizing with
    /// modified Gram-Schmidt (drop tolerance 1e-9).
    InvariantBasis invariant_basis(int l_max, bool zero_mean) const;

    /// Rank of the projected degree-l coefficient block (equals
    /// invariant_dimension(l) up to the drop tolerance).
    int projected_rank(int l) const;

private:
    std::vector<SpectralField> projected_degree_block(int l) const;

    const SphereTransform& transform_;
    RotationGroup group_;
    // Rotated-node coordinates per group element: (x3, phi) pairs.
    std::vector<std::vector<std::pair<double, double>>> rotated_nodes_;
};

} // namespace tetra
