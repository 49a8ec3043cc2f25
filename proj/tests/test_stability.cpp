#include "doctest.h"
#include "oracles.hpp"

#include "tetra/errors.hpp"
#include "tetra/jacobi_eigen.hpp"
#include "tetra/stability.hpp"

#include <cmath>
#include <stdexcept>

using namespace tetra;

namespace {
const SphereTransform& t20()
{
    static SphereTransform t(20);
    return t;
}
const InvariantBasis& basis20()
{
    static InvariantBasis b = TetraProjector(t20()).invariant_basis(20, true);
    return b;
}

const ProfileModel kAll[] = {ProfileModel::polynomial(9.0, 3.0), ProfileModel::sine_gordon(),
                             ProfileModel::sinh_gordon(), ProfileModel::exponential()};

// Frozen closed-form oracles (see the (Y*)^2 decomposition in test_symmetry).
const double kMu2Sine = 315.0 / (143.0 * M_PI);
const double kMu2Poly93 = 945.0 / (572.0 * M_PI);
const double kMu2Exp = -420.0 / (143.0 * M_PI);
} // namespace

TEST_CASE("jacobi eigensolver on a known matrix")
{
    // A = Q diag(1, 4, 9) Q^T for a rotation Q
    const std::vector<double> a = {
        6.0, -2.0, 1.0,
        -2.0, 5.0, -2.0,
        1.0, -2.0, 6.0,
    };
    const SymmetricEigen e = jacobi_eigen(a, 3);
    std::vector<double> ev = e.eigenvalues;
    std::sort(ev.begin(), ev.end());
    // characteristic roots of this matrix: 3, 5, 9
    CHECK(ev[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(9.0).epsilon(1e-12));
    // residual ||A v - lambda v||
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i) {
            double av = 0.0;
            for (int j = 0; j < 3; ++j)
                av += a[i * 3 + j] * e.eigenvectors[j * 3 + k];
            CHECK(av == doctest::Approx(e.eigenvalues[k] * e.eigenvectors[i * 3 + k])
                            .epsilon(1e-11)
                            .scale(1.0));
        }
    }
}

TEST_CASE("unperturbed Hessian spectrum")
{
    CHECK(unperturbed_hessian_eigenvalue(3) == 0.0);
    CHECK(unperturbed_hessian_eigenvalue(4) == doctest::Approx(-40.0 / 3.0).epsilon(1e-15));
    CHECK(unperturbed_hessian_eigenvalue(6) == doctest::Approx(-105.0).epsilon(1e-15));
    CHECK_THROWS_AS(unperturbed_hessian_eigenvalue(2), std::invalid_argument);
}

TEST_CASE("potential expansions")
{
    SUBCASE("sine-Gordon: V1 = 0, V2 = -lambda2 + 6 (Y*)^2")
    {
        const BranchExpansion b = compute_branch(t20(), ProfileModel::sine_gordon());
        const PotentialExpansion p = potentials(t20(), b);
        CHECK(norm(p.v1) == 0.0);
        const SpectralField expect =
            constant_field(-b.lambda2, 6) + 6.0 * t20().product(y_star(), y_star());
        CHECK(norm(p.v2 - expect) <= 1e-13);
    }
    SUBCASE("sinh-Gordon: V2 = -lambda2 - 6 (Y*)^2")
    {
        const BranchExpansion b = compute_branch(t20(), ProfileModel::sinh_gordon());
        const PotentialExpansion p = potentials(t20(), b);
        CHECK(norm(p.v1) == 0.0);
        const SpectralField expect =
            constant_field(-b.lambda2, 6) - 6.0 * t20().product(y_star(), y_star());
        CHECK(norm(p.v2 - expect) <= 1e-13);
    }
    SUBCASE("polynomial (9,3): V1 = 18 Y*")
    {
        const BranchExpansion b = compute_branch(t20(), ProfileModel::polynomial(9.0, 3.0));
        const PotentialExpansion p = potentials(t20(), b);
        CHECK(norm(p.v1 - 18.0 * y_star()) <= 1e-13);
    }
    SUBCASE("V1 parity: <V1 Y*, Y*> = 0")
    {
        for (const ProfileModel& m : kAll) {
            const BranchExpansion b = compute_branch(t20(), m);
            const PotentialExpansion p = potentials(t20(), b);
            CHECK(std::abs(inner_product(t20().product(p.v1, b.y_star), b.y_star)) <= 1e-12);
        }
    }
}

TEST_CASE("mu2 values, first-order cancellation")
{
    for (const ProfileModel& m : kAll) {
        CAPTURE(model_name(m.kind));
        const BranchExpansion b = compute_branch(t20(), m);
        const PotentialExpansion p = potentials(t20(), b);
        const Mu2Result r = compute_mu2(t20(), b, p);
        CHECK(std::abs(r.mu1) <= 1e-12);
        // Crandall-Rabinowitz sign relation
        const double gp = gamma_prime(m, b.lambda_star);
        CHECK(r.mu2 * (b.lambda2 * gp) < 0.0);
    }
    const auto mu2_of = [&](const ProfileModel& m) {
        const BranchExpansion b = compute_branch(t20(), m);
        return compute_mu2(t20(), b, potentials(t20(), b)).mu2;
    };
    CHECK(mu2_of(ProfileModel::sine_gordon()) == doctest::Approx(kMu2Sine).epsilon(1e-12));
    CHECK(mu2_of(ProfileModel::sinh_gordon()) == doctest::Approx(-kMu2Sine).epsilon(1e-12));
    CHECK(mu2_of(ProfileModel::polynomial(9.0, 3.0)) ==
          doctest::Approx(kMu2Poly93).epsilon(1e-11));
    CHECK(mu2_of(ProfileModel::exponential()) == doctest::Approx(kMu2Exp).epsilon(1e-11));
}

TEST_CASE("classical pitchfork oracle: mu2 = -2 lambda2 gamma' for unconstrained models")
{
    for (const ProfileModel& m :
         {ProfileModel::polynomial(9.0, 3.0), ProfileModel::polynomial(12.0, 1.0),
          ProfileModel::sine_gordon(), ProfileModel::sinh_gordon()}) {
        CAPTURE(model_name(m.kind));
        const BranchExpansion b = compute_branch(t20(), m);
        const Mu2Result r = compute_mu2(t20(), b, potentials(t20(), b));
        const double expect = -2.0 * b.lambda2 * gamma_prime(m, b.lambda_star);
        CHECK(r.mu2 == doctest::Approx(expect).epsilon(1e-11));
    }
}

TEST_CASE("eta2 = -mu2 through the independent Hessian route")
{
    for (const ProfileModel& m : {ProfileModel::polynomial(9.0, 3.0),
                                  ProfileModel::polynomial(12.0, 1.0),
                                  ProfileModel::sine_gordon(), ProfileModel::sinh_gordon(),
                                  ProfileModel::exponential()}) {
        CAPTURE(model_name(m.kind));
        const BranchExpansion b = compute_branch(t20(), m);
        const PotentialExpansion p = potentials(t20(), b);
        const Mu2Result mu = compute_mu2(t20(), b, p);
        const Eta2Result eta = compute_eta2(t20(), b, p);
        CHECK(std::abs(eta.eta1) <= 1e-12);
        CHECK(std::abs(eta.eta2 + mu.mu2) / std::abs(mu.mu2) <= 1e-8);
    }
    // frozen value: sine-Gordon eta2 = -315/(143 pi) ~ -0.7012
    const BranchExpansion b = compute_branch(t20(), ProfileModel::sine_gordon());
    const Eta2Result eta = compute_eta2(t20(), b, potentials(t20(), b));
    CHECK(eta.eta2 == doctest::Approx(-kMu2Sine).epsilon(1e-10));
}

TEST_CASE("zero-mean lemma: Delta(V1 Y*) has exactly zero mean")
{
    const BranchExpansion b = compute_branch(t20(), ProfileModel::polynomial(9.0, 3.0));
    const PotentialExpansion p = potentials(t20(), b);
    const SpectralField v1y = t20().product(p.v1, b.y_star);
    CHECK(laplacian(v1y).at(0, 0) == 0.0);
}

TEST_CASE("assembled Hessian at eps = 0")
{
    for (const ProfileModel& m : {ProfileModel::sine_gordon(), ProfileModel::exponential()}) {
        CAPTURE(model_name(m.kind));
        const BranchExpansion b = compute_branch(t20(), m);
        const HessianMatrix h = assemble_hessian(t20(), b, 0.0, basis20());
        REQUIRE(h.n == basis20().size());
        double worst_diag = 0.0, worst_off = 0.0;
        for (int i = 0; i < h.n; ++i)
            for (int j = 0; j < h.n; ++j) {
                const double hij = h.entries[static_cast<size_t>(i) * h.n + j];
                if (i == j)
                    worst_diag = std::max(
                        worst_diag,
                        std::abs(hij - unperturbed_hessian_eigenvalue(h.degree[i])));
                else
                    worst_off = std::max(worst_off, std::abs(hij));
            }
        CHECK(worst_diag <= 1e-10);
        CHECK(worst_off <= 1e-11);
        // l >= 4 block bounded away from zero
        for (int i = 0; i < h.n; ++i)
            if (h.degree[i] >= 4)
                CHECK(h.entries[static_cast<size_t>(i) * h.n + i] <= -40.0 / 3.0 + 1e-10);
        CHECK(std::abs(critical_eigenvalue(h).value) <= 1e-11);
    }
}

TEST_CASE("Hessian symmetry and gap persistence at eps = 0.05")
{
    for (const ProfileModel& m : kAll) {
        CAPTURE(model_name(m.kind));
        const BranchExpansion b = compute_branch(t20(), m);
        const HessianMatrix h = assemble_hessian(t20(), b, 0.05, basis20());
        CHECK(h.rel_asymmetry <= 1e-10);
        // every eigenvalue dominated by the l >= 4 block stays below -5
        const SymmetricEigen eig = jacobi_eigen(h.entries, h.n);
        int idx3 = -1;
        for (int i = 0; i < h.n; ++i)
            if (h.degree[i] == 3)
                idx3 = i;
        for (int k = 0; k < h.n; ++k) {
            double high = 0.0;
            for (int i = 0; i < h.n; ++i)
                if (h.degree[i] >= 4)
                    high += eig.eigenvectors[static_cast<size_t>(i) * h.n + k] *
                            eig.eigenvectors[static_cast<size_t>(i) * h.n + k];
            (void)idx3;
            if (high > 0.81)
                CHECK(eig.eigenvalues[k] < -5.0);
        }
    }
}

TEST_CASE("sine-Gordon eigenvalue curve converges to eps^2 eta2")
{
    const BranchExpansion b = compute_branch(t20(), ProfileModel::sine_gordon());
    const Eta2Result eta = compute_eta2(t20(), b, potentials(t20(), b));
    const std::vector<double> eps = {0.04, 0.02, 0.01};
    std::vector<double> diff;
    for (double e : eps) {
        const CriticalEigenvalue c = critical_eigenvalue(assemble_hessian(t20(), b, e, basis20()));
        CHECK(c.overlap > 0.9);
        CHECK(c.value < 0.0); // formally stable branch
        diff.push_back(std::abs(c.value - e * e * eta.eta2));
    }
    CHECK(oracles::loglog_slope(eps, diff) >= 2.7);
}

TEST_CASE("sinh-Gordon saddle direction at eps = 0.05")
{
    const BranchExpansion b = compute_branch(t20(), ProfileModel::sinh_gordon());
    const CriticalEigenvalue c = critical_eigenvalue(assemble_hessian(t20(), b, 0.05, basis20()));
    CHECK(c.value > 0.0);
}

TEST_CASE("second variation")
{
    const BranchExpansion b = compute_branch(t20(), ProfileModel::sine_gordon());
    SUBCASE("zero perturbation")
    {
        CHECK(second_variation(t20(), b, 0.02, SpectralField(6)) == 0.0);
    }
    SUBCASE("eps = 0 on a degree-4 basis vector gives eta4/2 = -20/3")
    {
        const SpectralField* v4 = nullptr;
        for (int i = 0; i < basis20().size(); ++i)
            if (basis20().degree[i] == 4)
                v4 = &basis20().vectors[i];
        REQUIRE(v4 != nullptr);
        CHECK(second_variation(t20(), b, 0.0, *v4) ==
              doctest::Approx(-20.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("eps = 0 on Y* sits in the kernel")
    {
        CHECK(std::abs(second_variation(t20(), b, 0.0, y_star())) <= 1e-12);
    }
    SUBCASE("agrees with the matrix quadratic form on random invariant fields")
    {
        for (const ProfileModel& m : kAll) {
            const BranchExpansion bm = compute_branch(t20(), m);
            const HessianMatrix h = assemble_hessian(t20(), bm, 0.03, basis20());
            std::mt19937 rng(99);
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            std::vector<double> coef(basis20().size());
            SpectralField v(20);
            for (int i = 0; i < basis20().size(); ++i) {
                coef[i] = dist(rng);
                v += coef[i] * basis20().vectors[i];
            }
            double quad = 0.0;
            for (int i = 0; i < h.n; ++i)
                for (int j = 0; j < h.n; ++j)
                    quad += coef[i] * h.entries[static_cast<size_t>(i) * h.n + j] * coef[j];
            const double dv = second_variation(t20(), bm, 0.03, v);
            CHECK(std::abs(dv - 0.5 * quad) <= 1e-9 * std::max(1.0, std::abs(dv)));
        }
    }
    SUBCASE("nonzero-mean perturbations are rejected")
    {
        CHECK_THROWS_AS(second_variation(t20(), b, 0.0, constant_field(1.0, 4)),
                        std::invalid_argument);
    }
}

TEST_CASE("prefactor guard trips for large amplitudes")
{
    // Exponential: dF/dpsi = -12 e^psi, so |dF/dpsi| < 1 wherever
    // psi < -ln 12 ~ -2.48. Drive a synthetic branch deep enough.
    BranchExpansion b = compute_branch(t20(), ProfileModel::exponential());
    b.y_star = 120.0 * y_star();
    b.psi2 = SpectralField(6);
    CHECK_THROWS_AS(assemble_hessian(t20(), b, 0.05, basis20()), SingularHessianError);
}

TEST_CASE("classify reproduces Table 1")
{
    const auto report = [&](const ProfileModel& m) { return classify(t20(), basis20(), m); };

    const StabilityReport poly = report(ProfileModel::polynomial(9.0, 3.0));
    CHECK(poly.stable);
    CHECK(poly.classification == "Stable (Maximum)");
    CHECK(poly.lambda2 < 0.0);
    CHECK(poly.gamma_prime > 0.0);
    CHECK(poly.mu2 > 0.0);
    CHECK(poly.eta2 < 0.0);
    CHECK(poly.eta_eps < 0.0);

    const StabilityReport sine = report(ProfileModel::sine_gordon());
    CHECK(sine.stable);
    CHECK(sine.lambda2 > 0.0);
    CHECK(sine.gamma_prime < 0.0);

    const StabilityReport sinh = report(ProfileModel::sinh_gordon());
    CHECK_FALSE(sinh.stable);
    CHECK(sinh.classification == "Unstable (Saddle)");
    CHECK(sinh.mu2 < 0.0);

    const StabilityReport expm = report(ProfileModel::exponential());
    CHECK_FALSE(expm.stable);
    CHECK(expm.lambda2 > 0.0);
    CHECK(expm.gamma_prime > 0.0);
    CHECK(expm.sign_product > 0);
    CHECK(expm.eta_eps > 0.0);

    // second polynomial parameter pair, same sign pattern
    const StabilityReport poly2 = report(ProfileModel::polynomial(12.0, 1.0));
    CHECK(poly2.stable);
    CHECK(poly2.lambda2 < 0.0);
    CHECK(poly2.mu2 > 0.0);
}
