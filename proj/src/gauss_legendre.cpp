#include "tetra/gauss_legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace tetra {

namespace {

// Legendre P_n(x) and its derivative via the three-term recurrence.
void legendre_pair(int n, double x, double& p, double& dp)
{
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = (n == 0) ? p0 : p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: need at least one node");

    std::vector<double> x(n), w(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess for the i-th root (descending), then Newton.
        double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p, dp;
        for (int it = 0; it < 64; ++it) {
            legendre_pair(n, xi, p, dp);
            const double dx = p / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        legendre_pair(n, xi, p, dp);
        const double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
        // Mirror so the rule is symmetric to the last bit.
        x[n - 1 - i] = xi;
        x[i] = -xi;
        w[n - 1 - i] = wi;
        w[i] = wi;
    }
    if (n % 2 == 1) {
        x[n / 2] = 0.0;
        double p, dp;
        legendre_pair(n, 0.0, p, dp);
        w[n / 2] = 2.0 / (dp * dp);
    }
    return {std::move(x), std::move(w)};
}

} // namespace tetra
