#include "tetra/legendre.hpp"

#include <cmath>

namespace tetra {

void legendre_row(int l_max, double x, std::vector<double>& out)
{
    out.assign(tri_size(l_max), 0.0);
    const double cos_theta = std::sqrt((1.0 - x) * (1.0 + x));

    // Diagonal seed Pbar_mm, then upward recurrence in l for each m.
    double pmm = std::sqrt(1.0 / (4.0 * M_PI));
    for (int m = 0; m <= l_max; ++m) {
        if (m > 0)
            pmm *= cos_theta * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
        out[tri_index(m, m)] = pmm;
        if (m == l_max)
            break;
        double p_prev = pmm;
        double p_curr = x * std::sqrt(2.0 * m + 3.0) * pmm;
        out[tri_index(m + 1, m)] = p_curr;
        double a_prev = std::sqrt(2.0 * m + 3.0);
        for (int l = m + 2; l <= l_max; ++l) {
            const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
            const double p_next = a * (x * p_curr - p_prev / a_prev);
            out[tri_index(l, m)] = p_next;
            p_prev = p_curr;
            p_curr = p_next;
            a_prev = a;
        }
    }
}

void legendre_row_dtheta(int l_max, double x, const std::vector<double>& plm,
                         std::vector<double>& out)
{
    out.assign(tri_size(l_max), 0.0);
    const double cos_theta = std::sqrt((1.0 - x) * (1.0 + x));
    for (int m = 0; m <= l_max; ++m) {
        for (int l = m; l <= l_max; ++l) {
            // d/dtheta Pbar_lm = (e_lm Pbar_{l-1,m} - l x Pbar_lm) / cos(theta),
            // e_lm = sqrt((l^2 - m^2)(2l+1)/(2l-1)).
            double num = -double(l) * x * plm[tri_index(l, m)];
            if (l > m) {
                const double e = std::sqrt((double(l) * l - double(m) * m) *
                                           (2.0 * l + 1.0) / (2.0 * l - 1.0));
                num += e * plm[tri_index(l - 1, m)];
            }
            out[tri_index(l, m)] = num / cos_theta;
        }
    }
}

} // namespace tetra
