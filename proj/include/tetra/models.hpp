#pragma once

#include "tetra/grid.hpp"
#include "tetra/transform.hpp"

#include <string>

namespace tetra {

enum class ModelKind { polynomial, sine_gordon, sinh_gordon, exponential };

std::string model_name(ModelKind k);

/// Parse "polynomial", "sine-gordon", "sinh-gordon", "exponential";
/// throws std::invalid_argument otherwise.
ModelKind parse_model(const std::string& name);

/// One of the four profile nonlinearities F(lambda, psi). The polynomial
/// model carries its two positive constants (mu, mu1); these are the model
/// parameters of the profile function, not eigenvalue corrections.
struct ProfileModel {
    ModelKind kind = ModelKind::sine_gordon;
    double mu = 9.0;
    double mu1 = 3.0;

    static ProfileModel polynomial(double mu, double mu1);
    static ProfileModel sine_gordon() { return {ModelKind::sine_gordon, 0.0, 0.0}; }
    static ProfileModel sinh_gordon() { return {ModelKind::sinh_gordon, 0.0, 0.0}; }
    static ProfileModel exponential() { return {ModelKind::exponential, 0.0, 0.0}; }
};

/// Partial derivatives of F at the bifurcation point (lambda*, 0).
struct DerivativeBundle {
    double d1; // dF/dpsi = -12
    double d2; // d2F/dpsi2
    double d3; // d3F/dpsi3
    double dl; // d2F/(dlambda dpsi) = gamma'(lambda*)
};

/// Critical parameter: the relevant root of gamma(lambda) = 0.
double critical_lambda(const ProfileModel& m);

/// Trivial-branch eigenvalue gamma(lambda) = 12 + dF/dpsi(lambda, 0).
double gamma(const ProfileModel& m, double lambda);

/// d gamma / d lambda.
double gamma_prime(const ProfileModel& m, double lambda);

/// Analytic derivatives at (lambda*, 0). For the exponential model these are
/// the local part lambda*e^psi; the zero-mean projection is applied by the
/// consumers.
DerivativeBundle derivative_bundle(const ProfileModel& m);

/// Pointwise F(lambda, psi) on the grid. The exponential model returns
/// lambda e^psi minus its spherical mean (mass-constrained form), so its
/// output has zero mean; it requires max|psi| <= 30.
GridField apply_F(const ProfileModel& m, double lambda, const GridField& psi,
                  const SphereTransform& transform);

/// Pointwise dF/dpsi(lambda, psi) (exponential: local part lambda e^psi).
GridField dpsi_F(const ProfileModel& m, double lambda, const GridField& psi);

} // namespace tetra
