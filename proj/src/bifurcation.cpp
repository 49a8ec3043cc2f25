#include "tetra/bifurcation.hpp"

#include "tetra/errors.hpp"
#include "tetra/symmetry.hpp"

#include <cmath>
#include <string>

namespace tetra {

namespace {

constexpr double kFredholmTol = 1e-10;

void require_band_limit(const SphereTransform& transform, int needed, const char* who)
{
    if (transform.l_max() < needed)
        throw ResolutionError(std::string(who) + ": band limit " +
                              std::to_string(transform.l_max()) +
                              " cannot represent the degree-" + std::to_string(needed) +
                              " products of the critical harmonic");
}

} // namespace

SpectralField apply_SL(const SpectralField& f)
{
    const double nf = norm(f);
    if (f.l_max() >= 3) {
        double overlap2 = 0.0;
        for (int m = -3; m <= 3; ++m)
            overlap2 += f.at(3, m) * f.at(3, m);
        const double overlap = std::sqrt(overlap2);
        if (overlap > kFredholmTol * nf) {
            if (nf == 0.0 || std::sqrt(std::max(nf * nf - overlap2, 0.0)) <= kFredholmTol * nf)
                throw KernelError("apply_SL: input lies in the kernel of L_0");
            throw FredholmError("apply_SL: solvability violated, |<f, Y*>|/||f|| = " +
                                std::to_string(overlap / nf));
        }
    }
    SpectralField u(f.l_max());
    for (int l = 0; l <= f.l_max(); ++l) {
        if (l == 3)
            continue;
        const double inv = 1.0 / (double(l) * (l + 1) - 12.0);
        for (int m = -l; m <= l; ++m)
            u.at(l, m) = inv * f.at(l, m);
    }
    return u;
}

SpectralField inverse_laplacian(const SpectralField& f)
{
    if (std::abs(f.at(0, 0)) > kFredholmTol * std::max(norm(f), 1e-300))
        throw FredholmError("inverse_laplacian: input has a nonzero spherical mean");
    SpectralField u(f.l_max());
    for (int l = 1; l <= f.l_max(); ++l) {
        const double inv = -1.0 / (double(l) * (l + 1));
        for (int m = -l; m <= l; ++m)
            u.at(l, m) = inv * f.at(l, m);
    }
    return u;
}

SpectralField compute_psi2(const SphereTransform& transform, const ProfileModel& m)
{
    require_band_limit(transform, 6, "compute_psi2");
    const DerivativeBundle d = derivative_bundle(m);
    SpectralField rhs = d.d2 * transform.product(y_star(), y_star());
    if (m.kind == ModelKind::exponential)
        rhs = zero_mean(rhs);
    return -0.5 * apply_SL(rhs);
}

double compute_lambda2(const SphereTransform& transform, const ProfileModel& m)
{
    return compute_branch(transform, m).lambda2;
}

BranchExpansion compute_branch(const SphereTransform& transform, const ProfileModel& m)
{
    require_band_limit(transform, 6, "compute_branch");
    const DerivativeBundle d = derivative_bundle(m);
    const double lambda_star = critical_lambda(m);
    const double gp = gamma_prime(m, lambda_star);
    if (std::abs(gp) < 1e-14)
        throw DegenerateBifurcationError("compute_branch: transversality gamma'(lambda*) "
                                         "vanishes");
    BranchExpansion b;
    b.model = m;
    b.lambda_star = lambda_star;
    b.y_star = y_star();
    const SpectralField ysq = transform.product(b.y_star, b.y_star);
    SpectralField rhs = d.d2 * ysq;
    if (m.kind == ModelKind::exponential)
        rhs = zero_mean(rhs);
    b.psi2 = -0.5 * apply_SL(rhs);
    const double psi2_proj = inner_product(b.psi2, ysq); // <psi2 Y*, Y*>
    const double quartic = inner_product(ysq, ysq);      // <(Y*)^4>
    b.lambda2 = -(d.d2 * psi2_proj + d.d3 / 6.0 * quartic) / gp;
    return b;
}

std::pair<double, SpectralField> branch_at(const BranchExpansion& b, double epsilon)
{
    if (std::abs(epsilon) > 0.5)
        throw std::domain_error("branch_at: |epsilon| exceeds the asymptotic validity "
                                "guard (0.5)");
    const double lambda = b.lambda_star + epsilon * epsilon * b.lambda2;
    SpectralField psi = epsilon * b.y_star + (epsilon * epsilon) * b.psi2;
    return {lambda, std::move(psi)};
}

SpectralField residual(const SphereTransform& transform, const ProfileModel& m, double lambda,
                       const SpectralField& psi)
{
    const GridField psi_grid = transform.synthesize(psi);
    const GridField f_grid = apply_F(m, lambda, psi_grid, transform);
    SpectralField r = transform.analyze(f_grid, transform.l_max());
    r -= laplacian(psi);
    return r;
}

} // namespace tetra
