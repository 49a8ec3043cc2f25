#include "tetra/stability.hpp"

#include "tetra/errors.hpp"
#include "tetra/jacobi_eigen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tetra {

double unperturbed_hessian_eigenvalue(int l)
{
    if (l < 3)
        throw std::invalid_argument("unperturbed_hessian_eigenvalue: zero-mean tetrahedral "
                                    "spectrum starts at l = 3");
    const double ll = double(l) * (l + 1);
    return -(ll / 12.0) * (ll - 12.0);
}

PotentialExpansion potentials(const SphereTransform& transform, const BranchExpansion& b)
{
    const DerivativeBundle d = derivative_bundle(b.model);
    PotentialExpansion p;
    p.v1 = d.d2 * b.y_star;
    const SpectralField ysq = transform.product(b.y_star, b.y_star);
    p.v2 = constant_field(d.dl * b.lambda2, 6) + d.d2 * b.psi2 + (0.5 * d.d3) * ysq;
    return p;
}

Mu2Result compute_mu2(const SphereTransform& transform, const BranchExpansion& b,
                      const PotentialExpansion& p)
{
    const SpectralField v1y = transform.product(p.v1, b.y_star);
    const double mu1 = inner_product(v1y, b.y_star);
    if (std::abs(mu1) > 1e-12)
        throw ConsistencyError("compute_mu2: first-order correction mu1 = " +
                               std::to_string(mu1) + " did not cancel");
    const SpectralField slv1y = apply_SL(v1y);
    const SpectralField v2y = transform.product(p.v2, b.y_star);
    const double mu2 = inner_product(v2y, b.y_star) - inner_product(v1y, slv1y);
    return {mu1, mu2};
}

namespace {

/// H_1 f = -(1/144) Delta(V1 Delta f), and the same shape for H_2.
SpectralField apply_sandwich(const SphereTransform& transform, const SpectralField& potential,
                             const SpectralField& f)
{
    const SpectralField inner = transform.product(potential, laplacian(f));
    return (-1.0 / 144.0) * laplacian(inner);
}

} // namespace

Eta2Result compute_eta2(const SphereTransform& transform, const BranchExpansion& b,
                        const PotentialExpansion& p)
{
    const SpectralField h1y = apply_sandwich(transform, p.v1, b.y_star);
    const double eta1 = inner_product(h1y, b.y_star);
    if (std::abs(eta1) > 1e-12)
        throw ConsistencyError("compute_eta2: first-order correction eta1 = " +
                               std::to_string(eta1) + " did not cancel");
    // H_2 with potential V2 + V1^2/12.
    const SpectralField v1sq = transform.product(p.v1, p.v1);
    const SpectralField w = p.v2 + (1.0 / 12.0) * v1sq;
    const SpectralField h2y = apply_sandwich(transform, w, b.y_star);
    // S_H = 12 S_L Delta^{-1}; Delta(V1 Y*) has zero mean by the divergence
    // theorem, so the inverse Laplacian is well-defined.
    const SpectralField sh_h1y = 12.0 * apply_SL(inverse_laplacian(h1y));
    const double eta2 = inner_product(h2y, b.y_star) - inner_product(sh_h1y, h1y);
    return {eta1, eta2};
}

namespace {

GridField branch_prefactor(const SphereTransform& transform, const BranchExpansion& b,
                           double epsilon)
{
    const auto [lambda, psi] = branch_at(b, epsilon);
    const GridField psi_grid = transform.synthesize(psi);
    GridField pref = dpsi_F(b.model, lambda, psi_grid);
    double min_abs = std::abs(pref.values[0]);
    for (double v : pref.values)
        min_abs = std::min(min_abs, std::abs(v));
    if (min_abs < 1.0)
        throw SingularHessianError("Hessian prefactor guard: min |dF/dpsi| = " +
                                   std::to_string(min_abs) + " < 1");
    return pref;
}

} // namespace

HessianMatrix assemble_hessian(const SphereTransform& transform, const BranchExpansion& b,
                               double epsilon, const InvariantBasis& basis)
{
    if (!basis.zero_mean)
        throw std::invalid_argument("assemble_hessian: basis must be zero-mean");
    const GridField pref = branch_prefactor(transform, b, epsilon);
    const int n = basis.size();
    HessianMatrix h;
    h.n = n;
    h.epsilon = epsilon;
    h.degree = basis.degree;
    h.entries.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        const SpectralField lap_bj = laplacian(basis.vectors[j]);
        GridField g = transform.synthesize(lap_bj);
        for (size_t k = 0; k < g.values.size(); ++k)
            g.values[k] /= pref.values[k];
        const SpectralField inner = transform.analyze(g, transform.l_max());
        SpectralField h_bj = laplacian(inner);
        h_bj -= lap_bj; // -Delta b_j + Delta((1/dF) Delta b_j)
        for (int i = 0; i < n; ++i)
            h.entries[static_cast<size_t>(i) * n + j] = inner_product(basis.vectors[i], h_bj);
    }
    double asym2 = 0.0, norm2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double hij = h.entries[static_cast<size_t>(i) * n + j];
            const double hji = h.entries[static_cast<size_t>(j) * n + i];
            asym2 += (hij - hji) * (hij - hji);
            norm2 += hij * hij;
        }
    h.rel_asymmetry = std::sqrt(asym2 / norm2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double s = 0.5 * (h.entries[static_cast<size_t>(i) * n + j] +
                                    h.entries[static_cast<size_t>(j) * n + i]);
            h.entries[static_cast<size_t>(i) * n + j] = s;
            h.entries[static_cast<size_t>(j) * n + i] = s;
        }
    return h;
}

CriticalEigenvalue critical_eigenvalue(const HessianMatrix& h)
{
    int idx3 = -1;
    for (int i = 0; i < h.n; ++i)
        if (h.degree[i] == 3) {
            idx3 = i;
            break;
        }
    if (idx3 < 0)
        throw std::invalid_argument("critical_eigenvalue: basis has no l = 3 vector");
    const SymmetricEigen eig = jacobi_eigen(h.entries, h.n);
    int best = 0;
    double best_overlap = -1.0;
    for (int k = 0; k < h.n; ++k) {
        const double o = std::abs(eig.eigenvectors[static_cast<size_t>(idx3) * h.n + k]);
        if (o > best_overlap) {
            best_overlap = o;
            best = k;
        }
    }
    if (best_overlap < 0.9)
        throw TrackingError("critical_eigenvalue: best Y* overlap " +
                            std::to_string(best_overlap) + " below the 0.9 threshold");
    return {eig.eigenvalues[best], best_overlap};
}

double second_variation(const SphereTransform& transform, const BranchExpansion& b,
                        double epsilon, const SpectralField& delta_psi)
{
    if (std::abs(delta_psi.at(0, 0)) > 1e-10 * std::max(norm(delta_psi), 1e-300))
        throw std::invalid_argument("second_variation: perturbation must be zero-mean");
    const GridField pref = branch_prefactor(transform, b, epsilon);
    const GridField dpsi_grid = transform.synthesize(delta_psi);
    const GridField neg_lap = transform.synthesize(-1.0 * laplacian(delta_psi));
    // Direct integrand: delta_psi (-Delta delta_psi) + (1/dF)(Delta delta_psi)^2.
    GridField direct(transform.grid());
    // L-form: (-Delta delta_psi)/dF * (dF delta_psi - Delta delta_psi).
    GridField lform(transform.grid());
    for (size_t k = 0; k < direct.values.size(); ++k) {
        const double dp = dpsi_grid.values[k];
        const double nl = neg_lap.values[k];
        const double f = pref.values[k];
        direct.values[k] = dp * nl + nl * nl / f;
        lform.values[k] = nl / f * (f * dp + nl);
    }
    const double v_direct = 0.5 * transform.integrate(direct);
    const double v_lform = 0.5 * transform.integrate(lform);
    const double scale = std::max({std::abs(v_direct), std::abs(v_lform), 1e-300});
    if (std::abs(v_direct - v_lform) / scale > 1e-10 && std::abs(v_direct - v_lform) > 1e-13)
        throw ConsistencyError("second_variation: direct and L-form disagree: " +
                               std::to_string(v_direct) + " vs " + std::to_string(v_lform));
    return v_direct;
}

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

} // namespace

StabilityReport classify(const SphereTransform& transform, const InvariantBasis& basis,
                         const ProfileModel& m)
{
    const BranchExpansion b = compute_branch(transform, m);
    const PotentialExpansion p = potentials(transform, b);
    const Mu2Result mu = compute_mu2(transform, b, p);
    const Eta2Result eta = compute_eta2(transform, b, p);

    StabilityReport r;
    r.model = m.kind;
    r.mu = m.mu;
    r.mu1_param = m.mu1;
    r.lambda_star = b.lambda_star;
    r.gamma_prime = gamma_prime(m, b.lambda_star);
    r.lambda2 = b.lambda2;
    r.mu2 = mu.mu2;
    r.eta2 = eta.eta2;
    r.sign_product = sign_of(b.lambda2 * r.gamma_prime);
    r.stable = r.sign_product < 0;
    r.classification = r.stable ? "Stable (Maximum)" : "Unstable (Saddle)";

    const HessianMatrix h = assemble_hessian(transform, b, 0.02, basis);
    const CriticalEigenvalue crit = critical_eigenvalue(h);
    r.eta_eps = crit.value;
    // Spectrum summary: largest eigenvalue among modes dominated by l >= 4.
    const SymmetricEigen eig = jacobi_eigen(h.entries, h.n);
    int idx3 = 0;
    for (int i = 0; i < h.n; ++i)
        if (h.degree[i] == 3)
            idx3 = i;
    double max_high = -1e300;
    for (int k = 0; k < h.n; ++k) {
        const double o = std::abs(eig.eigenvectors[static_cast<size_t>(idx3) * h.n + k]);
        if (o < 0.5)
            max_high = std::max(max_high, eig.eigenvalues[k]);
    }
    r.max_high_mode = max_high;

    if (sign_of(r.mu2) != -r.sign_product)
        throw ConsistencyError("classify: sign(mu2) disagrees with -sign(lambda2 gamma')");
    if (sign_of(r.eta2) != r.sign_product)
        throw ConsistencyError("classify: sign(eta2) disagrees with sign(lambda2 gamma')");
    if (sign_of(r.eta_eps) != sign_of(r.eta2))
        throw ConsistencyError("classify: tracked Hessian eigenvalue at eps = 0.02 "
                               "disagrees with eta2");
    return r;
}

} // namespace tetra
