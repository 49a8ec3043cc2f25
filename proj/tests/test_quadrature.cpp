#include "doctest.h"
#include "oracles.hpp"

#include "tetra/errors.hpp"
#include "tetra/gauss_legendre.hpp"
#include "tetra/transform.hpp"

#include <cmath>
#include <stdexcept>

using namespace tetra;

TEST_CASE("one-point rule is the midpoint")
{
    auto [x, w] = gauss_legendre(1);
    CHECK(x[0] == 0.0);
    CHECK(w[0] == 2.0);
}

TEST_CASE("two-point nodes are the roots of P2")
{
    // Independent oracle: bisect P2(x) = (3x^2 - 1)/2 on (0, 1).
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((3.0 * mid * mid - 1.0) / 2.0 < 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);

    auto [x, w] = gauss_legendre(2);
    CHECK(x[0] == doctest::Approx(-root).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(root).epsilon(1e-14));
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-14));
    // integral of x^2 over (-1,1) = 2/3, exactly integrated by two points
    CHECK(w[0] * x[0] * x[0] + w[1] * x[1] * x[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("invalid node count")
{
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("grid invariants: weights and nodes")
{
    for (int n : {4, 24, 32, 51}) {
        auto [x, w] = gauss_legendre(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(w[i] > 0.0);
            sum += w[i];
            if (i > 0)
                CHECK(x[i] > x[i - 1]);
            CHECK(std::abs(x[i] + x[n - 1 - i]) <= 1e-13);
        }
        CHECK(std::abs(sum - 2.0) <= 1e-13);
    }
}

TEST_CASE("24-point rule integrates x^4 y^4 z^4 over the sphere")
{
    SphereTransform t(15, 24, 64);
    const GridField v = oracles::monomial_on_grid(t.grid(), 2, 2, 2);
    CHECK(t.integrate(v) ==
          doctest::Approx(4.0 * M_PI * 27.0 / 135135.0).epsilon(1e-13));
    CHECK(oracles::monomial_moment(2, 2, 2) == doctest::Approx(4.0 * M_PI * 27.0 / 135135.0));
}

TEST_CASE("monomial moments match the double-factorial closed form")
{
    SphereTransform t(8);
    double worst = 0.0;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b)
            for (int c = 0; a + b + c <= 8; ++c) {
                const GridField v = oracles::monomial_on_grid(t.grid(), a, b, c);
                worst = std::max(worst,
                                 std::abs(t.integrate(v) - oracles::monomial_moment(a, b, c)));
            }
    CHECK(worst <= 1e-12);
}

TEST_CASE("default grid satisfies the de-aliasing contract")
{
    SphereTransform t(20);
    CHECK(t.grid().n_lat == 32);
    CHECK(t.grid().n_lon == 64);
    CHECK(t.grid().n_lat >= 31); // ceil(3 L / 2) + 1
    CHECK(t.grid().n_lon >= 61); // 3 L + 1
}

TEST_CASE("undersized custom grids are rejected")
{
    CHECK_THROWS_AS(SphereTransform(20, 30, 64), ResolutionError);
    CHECK_THROWS_AS(SphereTransform(20, 32, 60), ResolutionError);
}
