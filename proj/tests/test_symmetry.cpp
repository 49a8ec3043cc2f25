#include "doctest.h"
#include "oracles.hpp"

#include "tetra/symmetry.hpp"
#include "tetra/transform.hpp"

#include <cmath>
#include <set>

using namespace tetra;

namespace {
const SphereTransform& t20()
{
    static SphereTransform t(20);
    return t;
}
const TetraProjector& proj()
{
    static TetraProjector p(t20());
    return p;
}

Rotation multiply(const Rotation& a, const Rotation& b)
{
    Rotation c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                c[i * 3 + j] += a[i * 3 + k] * b[k * 3 + j];
    return c;
}

bool same(const Rotation& a, const Rotation& b)
{
    for (int i = 0; i < 9; ++i)
        if (std::abs(a[i] - b[i]) > 1e-12)
            return false;
    return true;
}
} // namespace

TEST_CASE("group structure")
{
    const RotationGroup g = tetrahedral_group();
    REQUIRE(g.elements.size() == 12);

    SUBCASE("contains the identity")
    {
        const Rotation id{1, 0, 0, 0, 1, 0, 0, 0, 1};
        bool found = false;
        for (const Rotation& r : g.elements)
            found = found || same(r, id);
        CHECK(found);
    }
    SUBCASE("closed under multiplication, with inverses")
    {
        for (const Rotation& a : g.elements)
            for (const Rotation& b : g.elements) {
                const Rotation ab = multiply(a, b);
                int hits = 0;
                for (const Rotation& r : g.elements)
                    hits += same(ab, r);
                CHECK(hits == 1);
            }
    }
    SUBCASE("trace census: 1 x 3, 8 x 0, 3 x -1")
    {
        // tr = 1 + 2 cos(angle): identity 3, 2 pi/3 rotations 0, pi rotations -1
        int n3 = 0, n0 = 0, nm1 = 0;
        for (const Rotation& r : g.elements) {
            const double tr = r[0] + r[4] + r[8];
            if (std::abs(tr - 3.0) < 1e-12)
                ++n3;
            else if (std::abs(tr) < 1e-12)
                ++n0;
            else if (std::abs(tr + 1.0) < 1e-12)
                ++nm1;
        }
        CHECK(n3 == 1);
        CHECK(n0 == 8);
        CHECK(nm1 == 3);
    }
    SUBCASE("all elements are rotations (orthogonal, det +1)")
    {
        for (const Rotation& r : g.elements) {
            const double det = r[0] * (r[4] * r[8] - r[5] * r[7]) -
                               r[1] * (r[3] * r[8] - r[5] * r[6]) +
                               r[2] * (r[3] * r[7] - r[4] * r[6]);
            CHECK(det == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("invariant dimensions from the character formula")
{
    CHECK(invariant_dimension(0) == 1);
    CHECK(invariant_dimension(1) == 0);
    CHECK(invariant_dimension(2) == 0);
    CHECK(invariant_dimension(3) == 1);
    CHECK(invariant_dimension(4) == 1);
    CHECK(invariant_dimension(5) == 0);
    CHECK(invariant_dimension(6) == 2);
    // cross-check against the projector rank on the full degree block
    for (int l = 0; l <= 12; ++l)
        CHECK(proj().projected_rank(l) == invariant_dimension(l));
}

TEST_CASE("projection")
{
    SUBCASE("Y* is fixed")
    {
        CHECK(norm(proj().project(y_star()) - y_star()) <= 1e-11);
    }
    SUBCASE("low modes are filtered")
    {
        SpectralField y10(1);
        y10.at(1, 0) = 1.0;
        CHECK(norm(proj().project(y10)) <= 1e-11);
        SpectralField y2(2);
        y2.at(2, 1) = 1.0;
        CHECK(norm(proj().project(y2)) <= 1e-11);
    }
    SUBCASE("constants are fixed")
    {
        const SpectralField c = constant_field(2.0, 3);
        CHECK(norm(proj().project(c) - c) <= 1e-12);
    }
    SUBCASE("idempotent on random fields")
    {
        const SpectralField f = oracles::random_field(10, 42);
        const SpectralField pf = proj().project(f);
        CHECK(norm(proj().project(pf) - pf) <= 1e-11);
    }
    SUBCASE("self-adjoint")
    {
        const SpectralField f = oracles::random_field(10, 43);
        const SpectralField g = oracles::random_field(10, 44);
        CHECK(std::abs(inner_product(proj().project(f), g) -
                       inner_product(f, proj().project(g))) <= 1e-11);
    }
}

TEST_CASE("y_star properties")
{
    CHECK(norm(y_star()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm(laplacian(y_star()) + 12.0 * y_star()) == 0.0);
    // positive on the x=y=z>0 octant
    const double x3 = 1.0 / std::sqrt(3.0);
    CHECK(t20().point_value(y_star(), x3, M_PI / 4.0) > 0.0);
    // integral (Y*)^3 = 0 (odd parity), via direct quadrature
    const GridField v = t20().synthesize(y_star());
    GridField cube(t20().grid());
    for (size_t k = 0; k < v.values.size(); ++k)
        cube.values[k] = v.values[k] * v.values[k] * v.values[k];
    CHECK(std::abs(t20().integrate(cube)) <= 1e-12);
    // norm via the moment oracle: integral (xyz)^2 = 4 pi / 105
    CHECK(105.0 / (4.0 * M_PI) * oracles::monomial_moment(1, 1, 1) ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("(Y*)^2 contains only degrees {0, 4, 6}")
{
    const SpectralField ysq = t20().product(y_star(), y_star());
    REQUIRE(ysq.l_max() == 6);
    double off = 0.0;
    double l2_block = 0.0;
    for (int l = 0; l <= 6; ++l)
        for (int m = -l; m <= l; ++m) {
            if (l == 2)
                l2_block = std::max(l2_block, std::abs(ysq.at(l, m)));
            if (l != 0 && l != 4 && l != 6)
                off = std::max(off, std::abs(ysq.at(l, m)));
        }
    CHECK(l2_block <= 1e-12);
    CHECK(off <= 1e-12);
    // frozen oracle values for the degree content of (Y*)^2:
    // c0^2 = 1/(4pi), c4^2 = 21/(121 pi), c6^2 = 200/(1573 pi)
    double c0 = 0.0, c4 = 0.0, c6 = 0.0;
    for (int m = 0; m <= 0; ++m)
        c0 += ysq.at(0, 0) * ysq.at(0, 0);
    for (int m = -4; m <= 4; ++m)
        c4 += ysq.at(4, m) * ysq.at(4, m);
    for (int m = -6; m <= 6; ++m)
        c6 += ysq.at(6, m) * ysq.at(6, m);
    CHECK(c0 == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-12));
    CHECK(c4 == doctest::Approx(21.0 / (121.0 * M_PI)).epsilon(1e-12));
    CHECK(c6 == doctest::Approx(200.0 / (1573.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("invariant basis")
{
    SUBCASE("degrees up to 4")
    {
        const InvariantBasis full = proj().invariant_basis(4, false);
        REQUIRE(full.size() == 3);
        CHECK(full.degree == std::vector<int>{0, 3, 4});
        const InvariantBasis zm = proj().invariant_basis(4, true);
        REQUIRE(zm.size() == 2);
        CHECK(zm.degree == std::vector<int>{3, 4});
        // first zero-mean vector is Y* (sign-canonicalized to +)
        CHECK(norm(zm.vectors[0].resized(3) - y_star()) <= 1e-11);
    }
    SUBCASE("orthonormal, T-fixed, no l in {1,2}, spectral gap 12")
    {
        const InvariantBasis b = proj().invariant_basis(12, true);
        int expected = 0;
        for (int l = 3; l <= 12; ++l)
            expected += invariant_dimension(l);
        REQUIRE(b.size() == expected);
        int min_ll = 1000;
        for (int i = 0; i < b.size(); ++i) {
            CHECK(b.degree[i] != 1);
            CHECK(b.degree[i] != 2);
            min_ll = std::min(min_ll, b.degree[i] * (b.degree[i] + 1));
            CHECK(norm(proj().project(b.vectors[i]) - b.vectors[i]) <= 1e-11);
            for (int j = 0; j <= i; ++j) {
                const double ip = inner_product(b.vectors[i], b.vectors[j]);
                CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) <= 1e-11);
            }
        }
        CHECK(min_ll == 12);
    }
}
