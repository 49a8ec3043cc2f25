#include "doctest.h"
#include "oracles.hpp"

#include "tetra/models.hpp"
#include "tetra/symmetry.hpp"
#include "tetra/transform.hpp"

#include <cmath>
#include <stdexcept>

using namespace tetra;

namespace {
const SphereTransform& t20()
{
    static SphereTransform t(20);
    return t;
}

GridField constant_grid(double v)
{
    GridField g(t20().grid());
    for (double& x : g.values)
        x = v;
    return g;
}

const ProfileModel kAll[] = {ProfileModel::polynomial(9.0, 3.0), ProfileModel::sine_gordon(),
                             ProfileModel::sinh_gordon(), ProfileModel::exponential()};
} // namespace

TEST_CASE("trivial branch: F(lambda, 0) = 0 for every model")
{
    for (const ProfileModel& m : kAll) {
        const GridField out = apply_F(m, 7.3, constant_grid(0.0), t20());
        for (double v : out.values)
            CHECK(std::abs(v) <= 1e-13);
    }
}

TEST_CASE("pointwise evaluations")
{
    SUBCASE("sine-Gordon at psi = pi/2")
    {
        const GridField out =
            apply_F(ProfileModel::sine_gordon(), 12.0, constant_grid(M_PI / 2.0), t20());
        for (double v : out.values)
            CHECK(v == doctest::Approx(-12.0).epsilon(1e-15));
    }
    SUBCASE("polynomial (9, 3) at lambda* = 1, psi = 1")
    {
        const ProfileModel m = ProfileModel::polynomial(9.0, 3.0);
        CHECK(critical_lambda(m) == doctest::Approx(1.0).epsilon(1e-15));
        const GridField out = apply_F(m, 1.0, constant_grid(1.0), t20());
        for (double v : out.values)
            CHECK(std::abs(v) <= 1e-13);
    }
}

TEST_CASE("critical parameters and gamma")
{
    CHECK(critical_lambda(ProfileModel::sine_gordon()) == 12.0);
    CHECK(critical_lambda(ProfileModel::sinh_gordon()) == 12.0);
    CHECK(critical_lambda(ProfileModel::exponential()) == -12.0);
    CHECK(critical_lambda(ProfileModel::polynomial(9.0, 3.0)) == doctest::Approx(1.0));

    CHECK(gamma(ProfileModel::sine_gordon(), 12.0) == 0.0);
    CHECK(gamma(ProfileModel::exponential(), 0.0) == 12.0);
    CHECK(gamma(ProfileModel::polynomial(9.0, 3.0), 0.0) == -9.0);

    for (const ProfileModel& m : kAll) {
        const double ls = critical_lambda(m);
        CHECK(std::abs(gamma(m, ls)) <= 1e-14);
        CHECK(12.0 + derivative_bundle(m).d1 == 0.0);
    }
}

TEST_CASE("gamma_prime values and finite-difference oracle")
{
    CHECK(gamma_prime(ProfileModel::sinh_gordon(), 12.0) == -1.0);
    CHECK(gamma_prime(ProfileModel::exponential(), -12.0) == 1.0);
    CHECK(gamma_prime(ProfileModel::polynomial(9.0, 3.0), 1.0) == doctest::Approx(18.0));

    for (const ProfileModel& m : kAll) {
        const double ls = critical_lambda(m);
        const double h = 1e-6;
        const double fd = (gamma(m, ls + h) - gamma(m, ls - h)) / (2.0 * h);
        CHECK(gamma_prime(m, ls) ==
              doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("derivative bundles")
{
    const DerivativeBundle poly = derivative_bundle(ProfileModel::polynomial(9.0, 3.0));
    CHECK(poly.d2 == doctest::Approx(18.0));
    CHECK(poly.d3 == doctest::Approx(18.0));
    CHECK(poly.dl == doctest::Approx(18.0));
    CHECK(derivative_bundle(ProfileModel::sine_gordon()).dl == -1.0);
    CHECK(derivative_bundle(ProfileModel::sine_gordon()).d3 == 12.0);
    CHECK(derivative_bundle(ProfileModel::sinh_gordon()).d3 == -12.0);
    CHECK(derivative_bundle(ProfileModel::exponential()).d2 == -12.0);
    CHECK(derivative_bundle(ProfileModel::exponential()).dl == 1.0);

    // dl equals gamma'(lambda*) exactly
    for (const ProfileModel& m : kAll)
        CHECK(derivative_bundle(m).dl == gamma_prime(m, critical_lambda(m)));
}

TEST_CASE("derivatives agree with central finite differences of apply_F")
{
    for (const ProfileModel& m : kAll) {
        const double ls = critical_lambda(m);
        const DerivativeBundle d = derivative_bundle(m);
        const double h = 1e-3;
        auto F = [&](double psi) {
            // pointwise value of the local part at a single site; evaluate on a
            // constant grid and read one site. For the exponential model the
            // mean subtraction cancels constants, so probe the local part via
            // dpsi_F integrated... use dpsi_F for d2/d3 instead.
            return apply_F(m, ls, constant_grid(psi), t20()).values[0];
        };
        auto dF = [&](double psi) { return dpsi_F(m, ls, constant_grid(psi)).values[0]; };
        const double d2_fd = (dF(h) - dF(-h)) / (2.0 * h);
        const double d3_fd = (dF(h) - 2.0 * dF(0.0) + dF(-h)) / (h * h);
        CHECK(d2_fd == doctest::Approx(d.d2).epsilon(1e-5).scale(12.0));
        CHECK(d3_fd == doctest::Approx(d.d3).epsilon(1e-5).scale(12.0));
        if (m.kind != ModelKind::exponential) {
            const double d1_fd = (F(h) - F(-h)) / (2.0 * h);
            // leading Taylor remainder is d3 h^2/6
            CHECK(d1_fd == doctest::Approx(d.d1 + d.d3 * h * h / 6.0).epsilon(1e-9).scale(12.0));
        }
    }
}

TEST_CASE("exponential mass constraint and guards")
{
    const ProfileModel m = ProfileModel::exponential();
    const SpectralField psi = 0.3 * oracles::random_field(6, 7);
    const GridField out = apply_F(m, -12.0, t20().synthesize(psi), t20());
    const SpectralField coeffs = t20().analyze(out, 20);
    CHECK(std::abs(coeffs.at(0, 0)) <= 1e-12);

    CHECK_THROWS_AS(apply_F(m, -12.0, constant_grid(31.0), t20()), std::domain_error);
    CHECK_THROWS_AS(ProfileModel::polynomial(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ProfileModel::polynomial(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("apply_F commutes with the tetrahedral projector on invariant fields")
{
    static TetraProjector proj(t20());
    for (const ProfileModel& m : kAll) {
        const double ls = critical_lambda(m);
        // T-invariant small field: the projector image of a random field
        SpectralField psi = proj.project(oracles::random_field(8, 19));
        psi *= 0.1 / norm(psi);
        const GridField f = apply_F(m, ls, t20().synthesize(psi), t20());
        const SpectralField fs = t20().analyze(f, 16);
        CHECK(norm(proj.project(fs) - fs) <= 1e-11 * std::max(1.0, norm(fs)));
    }
}

TEST_CASE("model names round-trip")
{
    for (const ProfileModel& m : kAll)
        CHECK(parse_model(model_name(m.kind)) == m.kind);
    CHECK_THROWS_AS(parse_model("cubic"), std::invalid_argument);
}
