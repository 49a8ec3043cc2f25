#include "tetra/jacobi_eigen.hpp"

#include <cmath>
#include <stdexcept>

namespace tetra {

SymmetricEigen jacobi_eigen(const std::vector<double>& a_in, int n)
{
    if (n <= 0 || a_in.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("jacobi_eigen: bad dimensions");
    std::vector<double> a = a_in;
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i) * n + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
        return std::sqrt(2.0 * s);
    };
    double fro = 0.0;
    for (double x : a)
        fro += x * x;
    fro = std::sqrt(fro);
    const double tol = 1e-12 * std::max(fro, 1.0);

    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<size_t>(p) * n + q];
                if (std::abs(apq) == 0.0)
                    continue;
                const double app = a[static_cast<size_t>(p) * n + p];
                const double aqq = a[static_cast<size_t>(q) * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[static_cast<size_t>(k) * n + p];
                    const double akq = a[static_cast<size_t>(k) * n + q];
                    a[static_cast<size_t>(k) * n + p] = c * akp - s * akq;
                    a[static_cast<size_t>(k) * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[static_cast<size_t>(p) * n + k];
                    const double aqk = a[static_cast<size_t>(q) * n + k];
                    a[static_cast<size_t>(p) * n + k] = c * apk - s * aqk;
                    a[static_cast<size_t>(q) * n + k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[static_cast<size_t>(k) * n + p];
                    const double vkq = v[static_cast<size_t>(k) * n + q];
                    v[static_cast<size_t>(k) * n + p] = c * vkp - s * vkq;
                    v[static_cast<size_t>(k) * n + q] = s * vkp + c * vkq;
                }
            }
    }

    SymmetricEigen out;
    out.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i)
        out.eigenvalues[i] = a[static_cast<size_t>(i) * n + i];
    out.eigenvectors = std::move(v);
    return out;
}

} // namespace tetra
