#pragma once

#include "tetra/field.hpp"
#include "tetra/models.hpp"
#include "tetra/transform.hpp"

#include <utility>

namespace tetra {

/// Pseudo-inverse S_L = (L_0|_{ker^perp})^{-1} of L_0 = -Delta - 12, diagonal
/// in the harmonic basis with entries 1/(l(l+1) - 12), the l = 3 kernel
/// excluded. Requires the Fredholm condition |<f, Y*>| <= 1e-10 ||f||; throws
/// KernelError for inputs that lie in the kernel, FredholmError otherwise.
SpectralField apply_SL(const SpectralField& f);

/// Inverse Laplacian on zero-mean fields: a_{l,m} -> -a_{l,m}/(l(l+1)), l >= 1.
/// Throws FredholmError if the input has a mean above 1e-10 ||f||.
SpectralField inverse_laplacian(const SpectralField& f);

/// Liapunov-Schmidt branch data: psi(eps) = eps Y* + eps^2 psi2 + O(eps^3),
/// lambda(eps) = lambda* + eps^2 lambda2 + O(eps^3).
struct BranchExpansion {
    ProfileModel model;
    double lambda_star = 0.0;
    double lambda2 = 0.0;
    SpectralField y_star;
    SpectralField psi2; // T-invariant, orthogonal to Y*; zero-mean for the
                        // mass-constrained exponential model
};

/// psi2 = -1/2 S_L[ P(d2 (Y*)^2) ], P = mean subtraction for the exponential
/// model and the identity otherwise. Requires transform band limit >= 6.
SpectralField compute_psi2(const SphereTransform& transform, const ProfileModel& m);

/// lambda2 = -[ d2 <psi2 Y*, Y*> + d3/6 <(Y*)^4> ] / gamma'(lambda*).
/// Throws DegenerateBifurcationError when gamma'(lambda*) = 0.
double compute_lambda2(const SphereTransform& transform, const ProfileModel& m);

/// Both second-order corrections in one pass.
BranchExpansion compute_branch(const SphereTransform& transform, const ProfileModel& m);

/// (lambda(eps), psi(eps)); the amplitude guard requires |eps| <= 0.5.
std::pair<double, SpectralField> branch_at(const BranchExpansion& b, double epsilon);

/// Stationary-equation residual R = -Delta psi + F(lambda, psi), analyzed on
/// the de-aliasing grid at the transform band limit.
SpectralField residual(const SphereTransform& transform, const ProfileModel& m, double lambda,
                       const SpectralField& psi);

} // namespace tetra
