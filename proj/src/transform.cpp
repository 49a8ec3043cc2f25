#include "tetra/transform.hpp"

#include "tetra/errors.hpp"
#include "tetra/gauss_legendre.hpp"
#include "tetra/legendre.hpp"

#include <cmath>
#include <string>

namespace tetra {

namespace {

int default_n_lat(int l_max)
{
    int n = (3 * l_max + 1) / 2 + 1; // ceil(3L/2) + 1
    if (n % 2 != 0)
        ++n;
    return n;
}

int default_n_lon(int l_max)
{
    return (3 * l_max + 1 + 3) / 4 * 4;
}

} // namespace

SphereTransform::SphereTransform(int l_max)
    : SphereTransform(l_max, default_n_lat(l_max), default_n_lon(l_max))
{
}

SphereTransform::SphereTransform(int l_max, int n_lat, int n_lon) : l_max_(l_max)
{
    if (l_max < 0)
        throw ResolutionError("SphereTransform: band limit must be nonnegative");
    const int need_lat = (3 * l_max % 2 == 0) ? 3 * l_max / 2 + 1 : (3 * l_max + 1) / 2 + 1;
    const int need_lon = 3 * l_max + 1;
    if (n_lat < need_lat || n_lon < need_lon)
        throw ResolutionError("SphereTransform: grid " + std::to_string(n_lat) + "x" +
                              std::to_string(n_lon) + " violates the de-aliasing contract for L=" +
                              std::to_string(l_max) + " (need " + std::to_string(need_lat) + "x" +
                              std::to_string(need_lon) + ")");
    grid_.n_lat = n_lat;
    grid_.n_lon = n_lon;
    auto [x, w] = gauss_legendre(n_lat);
    grid_.nodes = std::move(x);
    grid_.weights = std::move(w);
    build_tables();
}

void SphereTransform::build_tables()
{
    const int ts = tri_size(l_max_);
    plm_.resize(static_cast<size_t>(grid_.n_lat) * ts);
    dplm_.resize(static_cast<size_t>(grid_.n_lat) * ts);
    std::vector<double> row, drow;
    for (int i = 0; i < grid_.n_lat; ++i) {
        legendre_row(l_max_, grid_.nodes[i], row);
        legendre_row_dtheta(l_max_, grid_.nodes[i], row, drow);
        std::copy(row.begin(), row.end(), plm_.begin() + static_cast<size_t>(i) * ts);
        std::copy(drow.begin(), drow.end(), dplm_.begin() + static_cast<size_t>(i) * ts);
    }
    cos_m_.resize(static_cast<size_t>(l_max_ + 1) * grid_.n_lon);
    sin_m_.resize(static_cast<size_t>(l_max_ + 1) * grid_.n_lon);
    for (int m = 0; m <= l_max_; ++m)
        for (int j = 0; j < grid_.n_lon; ++j) {
            const double phi = 2.0 * M_PI * j / grid_.n_lon;
            cos_m_[static_cast<size_t>(m) * grid_.n_lon + j] = std::cos(m * phi);
            sin_m_[static_cast<size_t>(m) * grid_.n_lon + j] = std::sin(m * phi);
        }
}

GridField SphereTransform::synthesize_tables(const SpectralField& f,
                                             const std::vector<double>& tables) const
{
    if (f.l_max() > l_max_)
        throw ResolutionError("synthesize: field band limit " + std::to_string(f.l_max()) +
                              " exceeds transform band limit " + std::to_string(l_max_));
    const int L = f.l_max();
    const int ts = tri_size(l_max_);
    const double rt2 = std::sqrt(2.0);
    GridField out(grid_);
    std::vector<double> am(L + 1), bm(L + 1);
    for (int i = 0; i < grid_.n_lat; ++i) {
        const double* P = tables.data() + static_cast<size_t>(i) * ts;
        for (int m = 0; m <= L; ++m) {
            double a = 0.0, b = 0.0;
            for (int l = m; l <= L; ++l) {
                a += f.at(l, m) * P[tri_index(l, m)];
                if (m > 0)
                    b += f.at(l, -m) * P[tri_index(l, m)];
            }
            am[m] = (m > 0) ? rt2 * a : a;
            bm[m] = rt2 * b;
        }
        for (int j = 0; j < grid_.n_lon; ++j) {
            double v = am[0];
            for (int m = 1; m <= L; ++m)
                v += am[m] * cos_m_[static_cast<size_t>(m) * grid_.n_lon + j] +
                     bm[m] * sin_m_[static_cast<size_t>(m) * grid_.n_lon + j];
            out.at(i, j) = v;
        }
    }
    return out;
}

GridField SphereTransform::synthesize(const SpectralField& f) const
{
    return synthesize_tables(f, plm_);
}

GridField SphereTransform::synthesize_dtheta(const SpectralField& f) const
{
    return synthesize_tables(f, dplm_);
}

GridField SphereTransform::synthesize_dphi(const SpectralField& f) const
{
    // d/dphi swaps cos- and sin-components with factors -m, +m.
    SpectralField d(f.l_max());
    for (int l = 1; l <= f.l_max(); ++l)
        for (int m = 1; m <= l; ++m) {
            d.at(l, m) = m * f.at(l, -m);
            d.at(l, -m) = -m * f.at(l, m);
        }
    return synthesize_tables(d, plm_);
}

SpectralField SphereTransform::analyze(const GridField& v, int l_max_out) const
{
    if (l_max_out > l_max_)
        throw ResolutionError("analyze: requested band limit " + std::to_string(l_max_out) +
                              " exceeds transform band limit " + std::to_string(l_max_));
    if (v.grid != &grid_ && (v.grid == nullptr || v.grid->n_lat != grid_.n_lat ||
                             v.grid->n_lon != grid_.n_lon))
        throw ResolutionError("analyze: grid field does not match the transform grid");
    const int L = l_max_out;
    const int ts = tri_size(l_max_);
    const double dphi = 2.0 * M_PI / grid_.n_lon;
    const double rt2 = std::sqrt(2.0);
    SpectralField out(L);
    std::vector<double> cm(L + 1), sm(L + 1);
    for (int i = 0; i < grid_.n_lat; ++i) {
        for (int m = 0; m <= L; ++m) {
            double c = 0.0, s = 0.0;
            const double* C = cos_m_.data() + static_cast<size_t>(m) * grid_.n_lon;
            const double* S = sin_m_.data() + static_cast<size_t>(m) * grid_.n_lon;
            for (int j = 0; j < grid_.n_lon; ++j) {
                const double vij = v.at(i, j);
                c += vij * C[j];
                s += vij * S[j];
            }
            cm[m] = c * dphi;
            sm[m] = s * dphi;
        }
        const double* P = plm_.data() + static_cast<size_t>(i) * ts;
        const double w = grid_.weights[i];
        for (int m = 0; m <= L; ++m)
            for (int l = m; l <= L; ++l) {
                const double plw = w * P[tri_index(l, m)];
                if (m == 0) {
                    out.at(l, 0) += plw * cm[0];
                } else {
                    out.at(l, m) += rt2 * plw * cm[m];
                    out.at(l, -m) += rt2 * plw * sm[m];
                }
            }
    }
    return out;
}

double SphereTransform::integrate(const GridField& v) const
{
    const double dphi = 2.0 * M_PI / grid_.n_lon;
    double s = 0.0;
    for (int i = 0; i < grid_.n_lat; ++i) {
        double row = 0.0;
        for (int j = 0; j < grid_.n_lon; ++j)
            row += v.at(i, j);
        s += grid_.weights[i] * row;
    }
    return s * dphi;
}

double SphereTransform::integrate_product(const GridField& a, const GridField& b) const
{
    const double dphi = 2.0 * M_PI / grid_.n_lon;
    double s = 0.0;
    for (int i = 0; i < grid_.n_lat; ++i) {
        double row = 0.0;
        for (int j = 0; j < grid_.n_lon; ++j)
            row += a.at(i, j) * b.at(i, j);
        s += grid_.weights[i] * row;
    }
    return s * dphi;
}

double SphereTransform::point_value(const SpectralField& f, double x3, double phi) const
{
    const int L = f.l_max();
    thread_local std::vector<double> row;
    legendre_row(L, x3, row);
    const double rt2 = std::sqrt(2.0);
    double v = 0.0;
    double cm1 = 1.0, sm1 = 0.0; // cos/sin(m*phi) by angle addition
    const double c1 = std::cos(phi), s1 = std::sin(phi);
    for (int m = 0; m <= L; ++m) {
        double a = 0.0, b = 0.0;
        for (int l = m; l <= L; ++l) {
            a += f.at(l, m) * row[tri_index(l, m)];
            if (m > 0)
                b += f.at(l, -m) * row[tri_index(l, m)];
        }
        if (m == 0)
            v += a;
        else
            v += rt2 * (a * cm1 + b * sm1);
        const double c = cm1 * c1 - sm1 * s1;
        sm1 = sm1 * c1 + cm1 * s1;
        cm1 = c;
    }
    return v;
}

SpectralField SphereTransform::product(const SpectralField& f, const SpectralField& g) const
{
    if (f.l_max() > l_max_ || g.l_max() > l_max_)
        throw ResolutionError("product: input band limit exceeds the transform band limit");
    const GridField fv = synthesize(f);
    const GridField gv = synthesize(g);
    GridField pv(grid_);
    for (size_t k = 0; k < pv.values.size(); ++k)
        pv.values[k] = fv.values[k] * gv.values[k];
    const int l_out = std::min(f.l_max() + g.l_max(), l_max_);
    return analyze(pv, l_out);
}

SpectralField SphereTransform::jacobian(const SpectralField& f, const SpectralField& g) const
{
    const GridField f_phi = synthesize_dphi(f);
    const GridField f_theta = synthesize_dtheta(f);
    const GridField g_phi = synthesize_dphi(g);
    const GridField g_theta = synthesize_dtheta(g);
    GridField jv(grid_);
    for (int i = 0; i < grid_.n_lat; ++i) {
        const double x = grid_.nodes[i];
        const double inv_cos = 1.0 / std::sqrt((1.0 - x) * (1.0 + x));
        for (int j = 0; j < grid_.n_lon; ++j)
            jv.at(i, j) = inv_cos * (f_phi.at(i, j) * g_theta.at(i, j) -
                                     f_theta.at(i, j) * g_phi.at(i, j));
    }
    const int l_out = std::min(f.l_max() + g.l_max(), l_max_);
    return analyze(jv, l_out);
}

} // namespace tetra
