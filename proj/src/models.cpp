#include "tetra/models.hpp"

#include "tetra/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace tetra {

std::string model_name(ModelKind k)
{
    switch (k) {
    case ModelKind::polynomial: return "polynomial";
    case ModelKind::sine_gordon: return "sine-gordon";
    case ModelKind::sinh_gordon: return "sinh-gordon";
    case ModelKind::exponential: return "exponential";
    }
    return "?";
}

ModelKind parse_model(const std::string& name)
{
    if (name == "polynomial")
        return ModelKind::polynomial;
    if (name == "sine-gordon")
        return ModelKind::sine_gordon;
    if (name == "sinh-gordon")
        return ModelKind::sinh_gordon;
    if (name == "exponential")
        return ModelKind::exponential;
    throw std::invalid_argument("unknown model '" + name + "'");
}

ProfileModel ProfileModel::polynomial(double mu, double mu1)
{
    if (!(mu > 0.0) || !(mu1 > 0.0))
        throw std::invalid_argument("polynomial parameters must be positive");
    return {ModelKind::polynomial, mu, mu1};
}

double critical_lambda(const ProfileModel& m)
{
    switch (m.kind) {
    case ModelKind::polynomial: return std::sqrt(m.mu / (3.0 * m.mu1));
    case ModelKind::sine_gordon:
    case ModelKind::sinh_gordon: return 12.0;
    case ModelKind::exponential: return -12.0;
    }
    return 0.0;
}

double gamma(const ProfileModel& m, double lambda)
{
    switch (m.kind) {
    case ModelKind::polynomial: return 3.0 * m.mu1 * lambda * lambda - m.mu;
    case ModelKind::sine_gordon:
    case ModelKind::sinh_gordon: return 12.0 - lambda;
    case ModelKind::exponential: return 12.0 + lambda;
    }
    return 0.0;
}

double gamma_prime(const ProfileModel& m, double lambda)
{
    switch (m.kind) {
    case ModelKind::polynomial: return 6.0 * m.mu1 * lambda;
    case ModelKind::sine_gordon:
    case ModelKind::sinh_gordon: return -1.0;
    case ModelKind::exponential: return 1.0;
    }
    return 0.0;
}

DerivativeBundle derivative_bundle(const ProfileModel& m)
{
    const double ls = critical_lambda(m);
    switch (m.kind) {
    case ModelKind::polynomial:
        return {-12.0, 6.0 * m.mu1 * ls, 6.0 * m.mu1, 6.0 * m.mu1 * ls};
    case ModelKind::sine_gordon: return {-12.0, 0.0, ls, -1.0};
    case ModelKind::sinh_gordon: return {-12.0, 0.0, -ls, -1.0};
    case ModelKind::exponential: return {-12.0, ls, ls, 1.0};
    }
    return {};
}

namespace {

void check_polynomial(const ProfileModel& m)
{
    if (!(m.mu > 0.0) || !(m.mu1 > 0.0))
        throw std::invalid_argument("polynomial parameters must be positive");
}

} // namespace

GridField apply_F(const ProfileModel& m, double lambda, const GridField& psi,
                  const SphereTransform& transform)
{
    GridField out(*psi.grid);
    switch (m.kind) {
    case ModelKind::polynomial: {
        check_polynomial(m);
        const double lin = 3.0 * m.mu1 * lambda * lambda - (m.mu + 12.0);
        for (size_t k = 0; k < psi.values.size(); ++k) {
            const double p = psi.values[k];
            out.values[k] = m.mu1 * (3.0 * lambda * p * p + p * p * p) + lin * p;
        }
        break;
    }
    case ModelKind::sine_gordon:
        for (size_t k = 0; k < psi.values.size(); ++k)
            out.values[k] = -lambda * std::sin(psi.values[k]);
        break;
    case ModelKind::sinh_gordon:
        for (size_t k = 0; k < psi.values.size(); ++k)
            out.values[k] = -lambda * std::sinh(psi.values[k]);
        break;
    case ModelKind::exponential: {
        for (size_t k = 0; k < psi.values.size(); ++k) {
            if (std::abs(psi.values[k]) > 30.0)
                throw std::domain_error("apply_F: |psi| exceeds the exponential overflow guard (30)");
            out.values[k] = lambda * std::exp(psi.values[k]);
        }
        // Mass constraint: subtract the spherical mean of lambda e^psi.
        const double mean = transform.integrate(out) / (4.0 * M_PI);
        for (double& v : out.values)
            v -= mean;
        break;
    }
    }
    return out;
}

GridField dpsi_F(const ProfileModel& m, double lambda, const GridField& psi)
{
    GridField out(*psi.grid);
    switch (m.kind) {
    case ModelKind::polynomial: {
        check_polynomial(m);
        const double lin = 3.0 * m.mu1 * lambda * lambda - (m.mu + 12.0);
        for (size_t k = 0; k < psi.values.size(); ++k) {
            const double p = psi.values[k];
            out.values[k] = m.mu1 * (6.0 * lambda * p + 3.0 * p * p) + lin;
        }
        break;
    }
    case ModelKind::sine_gordon:
        for (size_t k = 0; k < psi.values.size(); ++k)
            out.values[k] = -lambda * std::cos(psi.values[k]);
        break;
    case ModelKind::sinh_gordon:
        for (size_t k = 0; k < psi.values.size(); ++k)
            out.values[k] = -lambda * std::cosh(psi.values[k]);
        break;
    case ModelKind::exponential:
        for (size_t k = 0; k < psi.values.size(); ++k) {
            if (std::abs(psi.values[k]) > 30.0)
                throw std::domain_error("dpsi_F: |psi| exceeds the exponential overflow guard (30)");
            out.values[k] = lambda * std::exp(psi.values[k]);
        }
        break;
    }
    return out;
}

} // namespace tetra
