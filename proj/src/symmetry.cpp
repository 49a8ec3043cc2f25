#include "tetra/symmetry.hpp"

#include "tetra/errors.hpp"
#include "tetra/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tetra {

RotationGroup tetrahedral_group()
{
    // Signed permutation matrices with determinant +1 and an even number of
    // sign flips: identity, the eight 3-cycles (+-120 deg about cube
    // diagonals), and the three 180 deg coordinate-axis rotations.
    RotationGroup g;
    auto add = [&g](std::initializer_list<double> r) {
        Rotation m{};
        std::copy(r.begin(), r.end(), m.begin());
        g.elements.push_back(m);
    };
    add({1, 0, 0, 0, 1, 0, 0, 0, 1});
    // C3 about (1,1,1), (-1,-1,1), (1,-1,-1), (-1,1,-1)
    add({0, 0, 1, 1, 0, 0, 0, 1, 0});
    add({0, 0, -1, 1, 0, 0, 0, -1, 0});
    add({0, 0, -1, -1, 0, 0, 0, 1, 0});
    add({0, 0, 1, -1, 0, 0, 0, -1, 0});
    // C3^2 about the same diagonals
    add({0, 1, 0, 0, 0, 1, 1, 0, 0});
    add({0, 1, 0, 0, 0, -1, -1, 0, 0});
    add({0, -1, 0, 0, 0, 1, -1, 0, 0});
    add({0, -1, 0, 0, 0, -1, 1, 0, 0});
    // C2 about x, y, z
    add({1, 0, 0, 0, -1, 0, 0, 0, -1});
    add({-1, 0, 0, 0, 1, 0, 0, 0, -1});
    add({-1, 0, 0, 0, -1, 0, 0, 0, 1});
    return g;
}

int invariant_dimension(int l)
{
    if (l < 0)
        throw std::invalid_argument("invariant_dimension: negative degree");
    // chi_l(2 pi/3) cycles 1, 0, -1; chi_l(pi) alternates 1, -1.
    static constexpr int chi3[3] = {1, 0, -1};
    const int chi2 = (l % 2 == 0) ? 1 : -1;
    const int num = (2 * l + 1) + 8 * chi3[l % 3] + 3 * chi2;
    return num / 12;
}

SpectralField y_star()
{
    SpectralField f(3);
    f.at(3, -2) = 1.0;
    return f;
}

TetraProjector::TetraProjector(const SphereTransform& transform)
    : transform_(transform), group_(tetrahedral_group())
{
    const SphericalGrid& g = transform_.grid();
    rotated_nodes_.resize(group_.elements.size());
    for (size_t k = 0; k < group_.elements.size(); ++k) {
        const Rotation& R = group_.elements[k];
        auto& pts = rotated_nodes_[k];
        pts.reserve(static_cast<size_t>(g.n_lat) * g.n_lon);
        for (int i = 0; i < g.n_lat; ++i) {
            const double x3 = g.nodes[i];
            const double ct = std::sqrt((1.0 - x3) * (1.0 + x3));
            for (int j = 0; j < g.n_lon; ++j) {
                const double phi = 2.0 * M_PI * j / g.n_lon;
                const double p[3] = {ct * std::cos(phi), ct * std::sin(phi), x3};
                // g^{-1} x = R^T x for orthogonal R.
                const double y0 = R[0] * p[0] + R[3] * p[1] + R[6] * p[2];
                const double y1 = R[1] * p[0] + R[4] * p[1] + R[7] * p[2];
                const double y2 = R[2] * p[0] + R[5] * p[1] + R[8] * p[2];
                pts.emplace_back(std::clamp(y2, -1.0, 1.0), std::atan2(y1, y0));
            }
        }
    }
}

SpectralField TetraProjector::project(const SpectralField& f) const
{
    if (f.l_max() > transform_.l_max())
        throw ResolutionError("project: field band limit exceeds the transform band limit");
    const SphericalGrid& g = transform_.grid();
    GridField avg(g);
    const double inv = 1.0 / static_cast<double>(group_.elements.size());
    for (size_t k = 0; k < group_.elements.size(); ++k) {
        const auto& pts = rotated_nodes_[k];
        for (size_t idx = 0; idx < pts.size(); ++idx)
            avg.values[idx] += transform_.point_value(f, pts[idx].first, pts[idx].second);
    }
    for (double& v : avg.values)
        v *= inv;
    return transform_.analyze(avg, f.l_max());
}

std::vector<SpectralField> TetraProjector::projected_degree_block(int l) const
{
    // Project all 2l+1 standard harmonics of degree l at once. Rotations
    // preserve the degree, so only the degree-l coefficient block is kept.
    const SphericalGrid& g = transform_.grid();
    const size_t n_pts = static_cast<size_t>(g.n_lat) * g.n_lon;
    std::vector<GridField> avg(2 * l + 1, GridField(g));
    std::vector<double> row;
    const double rt2 = std::sqrt(2.0);
    for (size_t k = 0; k < group_.elements.size(); ++k) {
        const auto& pts = rotated_nodes_[k];
        for (size_t idx = 0; idx < n_pts; ++idx) {
            legendre_row(l, pts[idx].first, row);
            const double phi = pts[idx].second;
            for (int m = 0; m <= l; ++m) {
                const double p = row[tri_index(l, m)];
                if (m == 0) {
                    avg[l].values[idx] += p;
                } else {
                    avg[l + m].values[idx] += rt2 * p * std::cos(m * phi);
                    avg[l - m].values[idx] += rt2 * p * std::sin(m * phi);
                }
            }
        }
    }
    const double inv = 1.0 / static_cast<double>(group_.elements.size());
    std::vector<SpectralField> cols;
    cols.reserve(2 * l + 1);
    for (int c = 0; c < 2 * l + 1; ++c) {
        for (double& v : avg[c].values)
            v *= inv;
        SpectralField full = transform_.analyze(avg[c], l);
        SpectralField proj(l);
        for (int m = -l; m <= l; ++m)
            proj.at(l, m) = full.at(l, m);
        cols.push_back(std::move(proj));
    }
    return cols;
}

namespace {

constexpr double kDropTol = 1e-9;

/// Norm-pivoted modified Gram-Schmidt with a drop tolerance; appends the
/// surviving orthonormal columns (sign-canonicalized) to out.
int gram_schmidt_append(std::vector<SpectralField> cols, int l, std::vector<SpectralField>& out,
                        std::vector<int>& degrees)
{
    int rank = 0;
    std::vector<SpectralField> kept;
    while (!cols.empty()) {
        size_t best = 0;
        double best_norm = -1.0;
        for (size_t i = 0; i < cols.size(); ++i) {
            const double n = norm(cols[i]);
            if (n > best_norm) {
                best_norm = n;
                best = i;
            }
        }
        if (best_norm < kDropTol)
            break;
        SpectralField v = cols[best];
        cols.erase(cols.begin() + best);
        v *= 1.0 / best_norm;
        // Re-orthogonalize once for robustness at small multiplicities.
        for (const SpectralField& u : kept)
            v -= inner_product(v, u) * u;
        const double n2 = norm(v);
        if (n2 < kDropTol)
            continue;
        v *= 1.0 / n2;
        // Deterministic sign: largest-magnitude coefficient positive.
        double amax = 0.0;
        int sgn = 1;
        for (double c : v.coeffs())
            if (std::abs(c) > amax) {
                amax = std::abs(c);
                sgn = (c >= 0.0) ? 1 : -1;
            }
        if (sgn < 0)
            v *= -1.0;
        for (SpectralField& r : cols)
            r -= inner_product(r, v) * v;
        kept.push_back(v);
        ++rank;
    }
    for (SpectralField& v : kept) {
        out.push_back(std::move(v));
        degrees.push_back(l);
    }
    return rank;
}

} // namespace

int TetraProjector::projected_rank(int l) const
{
    std::vector<SpectralField> out;
    std::vector<int> degs;
    return gram_schmidt_append(projected_degree_block(l), l, out, degs);
}

InvariantBasis TetraProjector::invariant_basis(int l_max, bool zero_mean) const
{
    if (l_max < 3)
        throw ResolutionError("invariant_basis: need l_max >= 3 to reach the first "
                              "tetrahedral harmonic");
    if (l_max > transform_.l_max())
        throw ResolutionError("invariant_basis: l_max exceeds the transform band limit");
    InvariantBasis basis;
    basis.l_max = l_max;
    basis.zero_mean = zero_mean;
    for (int l = zero_mean ? 1 : 0; l <= l_max; ++l) {
        if (invariant_dimension(l) == 0)
            continue;
        const int rank =
            gram_schmidt_append(projected_degree_block(l), l, basis.vectors, basis.degree);
        if (rank != invariant_dimension(l))
            throw ConsistencyError("invariant_basis: projector rank at degree " +
                                   std::to_string(l) + " is " + std::to_string(rank) +
                                   ", character formula gives " +
                                   std::to_string(invariant_dimension(l)));
    }
    return basis;
}

} // namespace tetra
