#pragma once

#include "tetra/bifurcation.hpp"
#include "tetra/field.hpp"
#include "tetra/models.hpp"
#include "tetra/symmetry.hpp"
#include "tetra/transform.hpp"

#include <string>
#include <vector>

namespace tetra {

/// Unperturbed Energy-Casimir Hessian eigenvalue on the zero-mean tetrahedral
/// spectrum: eta_l^(0) = -(l(l+1)/12) [l(l+1) - 12], l >= 3.
double unperturbed_hessian_eigenvalue(int l);

/// Potential expansion along the branch:
/// dF/dpsi(lambda(eps), psi(eps)) = -12 + eps V1 + eps^2 V2 + O(eps^3).
struct PotentialExpansion {
    SpectralField v1; // d2 Y*
    SpectralField v2; // dl lambda2 + d2 psi2 + (d3/2) (Y*)^2
};

PotentialExpansion potentials(const SphereTransform& transform, const BranchExpansion& b);

struct Mu2Result {
    double mu1; // <V1 Y*, Y*>, vanishes by odd parity
    double mu2; // <V2 Y*, Y*> - <V1 Y*, S_L V1 Y*>
};

/// Second-order eigenvalue correction of the linearized operator L(eps).
Mu2Result compute_mu2(const SphereTransform& transform, const BranchExpansion& b,
                      const PotentialExpansion& p);

struct Eta2Result {
    double eta1; // <H_1 Y*, Y*>, vanishes with mu1
    double eta2; // <H_2 Y*, Y*> - <S_H H_1 Y*, H_1 Y*>
};

/// Second-order Hessian eigenvalue correction through the independent route
/// H_1 = -(1/144) Delta(V1 Delta .), H_2 = -(1/144) Delta((V2 + V1^2/12) Delta .),
/// S_H = 12 S_L Delta^{-1}, all applied as explicit operators.
Eta2Result compute_eta2(const SphereTransform& transform, const BranchExpansion& b,
                        const PotentialExpansion& p);

/// Dense symmetric Energy-Casimir Hessian on a zero-mean invariant basis.
struct HessianMatrix {
    int n = 0;
    std::vector<double> entries; // row-major, symmetrized
    double epsilon = 0.0;
    double rel_asymmetry = 0.0; // ||H - H^T|| / ||H|| before symmetrization
    std::vector<int> degree;    // degree of each basis vector
};

/// Entries <b_i, -Delta b_j + Delta((1/dF_psi) Delta b_j)> with the pointwise
/// prefactor evaluated along the branch. Guards min |dF/dpsi| >= 1
/// (SingularHessianError otherwise).
HessianMatrix assemble_hessian(const SphereTransform& transform, const BranchExpansion& b,
                               double epsilon, const InvariantBasis& basis);

struct CriticalEigenvalue {
    double value = 0.0;
    double overlap = 0.0; // |<eigenvector, Y*>|
};

/// Eigenvalue of the branch whose eigenvector has maximal overlap with Y*;
/// throws TrackingError when the overlap drops below 0.9.
CriticalEigenvalue critical_eigenvalue(const HessianMatrix& h);

/// Energy-Casimir quadratic form delta^2 H_C[delta psi], computed by both the
/// direct integrand and the L-form; the two must agree to 1e-10 relative
/// (ConsistencyError otherwise). delta_psi must be zero-mean.
double second_variation(const SphereTransform& transform, const BranchExpansion& b,
                        double epsilon, const SpectralField& delta_psi);

struct StabilityReport {
    ModelKind model;
    double mu = 0.0, mu1_param = 0.0; // polynomial parameters (when applicable)
    double lambda_star = 0.0;
    double gamma_prime = 0.0;
    double lambda2 = 0.0;
    double mu2 = 0.0;
    double eta2 = 0.0;
    double eta_eps = 0.0;       // tracked Hessian eigenvalue at eps = 0.02
    double max_high_mode = 0.0; // largest eigenvalue among l >= 4 dominated modes
    int sign_product = 0;       // sign(lambda2 * gamma'(lambda*))
    bool stable = false;
    std::string classification; // "Stable (Maximum)" | "Unstable (Saddle)"
};

/// Theorem classifier with cross-checks: classification from
/// sign(lambda2 gamma') < 0, verified against sign(mu2), sign(eta2) and the
/// tracked Hessian eigenvalue at eps = 0.02 (ConsistencyError on disagreement).
StabilityReport classify(const SphereTransform& transform, const InvariantBasis& basis,
                         const ProfileModel& m);

} // namespace tetra
