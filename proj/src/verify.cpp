#include "tetra/verify.hpp"

#include "tetra/bifurcation.hpp"
#include "tetra/errors.hpp"
#include "tetra/jacobi_eigen.hpp"
#include "tetra/report.hpp"
#include "tetra/stability.hpp"
#include "tetra/symmetry.hpp"
#include "tetra/transform.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <sstream>

namespace tetra {

namespace {

struct Runner {
    std::vector<CheckResult> results;

    /// Body returns (measured, detail); pass means measured <= threshold.
    void bounded(const std::string& name, double threshold,
                 const std::function<std::pair<double, std::string>()>& body)
    {
        CheckResult r;
        r.name = name;
        r.threshold = threshold;
        try {
            auto [measured, detail] = body();
            r.measured = measured;
            r.pass = measured <= threshold;
            r.detail = detail;
        } catch (const std::exception& e) {
            r.measured = std::numeric_limits<double>::quiet_NaN();
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }

    /// Body returns (measured, pass, detail) for non-threshold checks.
    void predicate(const std::string& name,
                   const std::function<std::tuple<double, bool, std::string>()>& body)
    {
        CheckResult r;
        r.name = name;
        r.threshold = 0.0;
        try {
            auto [measured, pass, detail] = body();
            r.measured = measured;
            r.pass = pass;
            r.detail = detail;
        } catch (const std::exception& e) {
            r.measured = std::numeric_limits<double>::quiet_NaN();
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

SpectralField random_field(int l_max, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SpectralField f(l_max);
    for (double& c : f.coeffs())
        c = dist(rng);
    return f;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const int n = static_cast<int>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double monomial_moment(int a, int b, int c)
{
    auto dfact = [](int n) {
        double p = 1.0;
        for (int k = n; k >= 2; k -= 2)
            p *= k;
        return p;
    };
    return 4.0 * M_PI * dfact(2 * a - 1) * dfact(2 * b - 1) * dfact(2 * c - 1) /
           dfact(2 * (a + b + c) + 1);
}

std::vector<ProfileModel> all_models(const VerifyOptions& opt)
{
    return {ProfileModel::polynomial(opt.mu, opt.mu1), ProfileModel::sine_gordon(),
            ProfileModel::sinh_gordon(), ProfileModel::exponential()};
}

} // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opt)
{
    Runner run;

    std::unique_ptr<SphereTransform> transform;
    run.predicate("resolution.transform", [&] {
        transform = std::make_unique<SphereTransform>(opt.l_max);
        std::ostringstream os;
        os << "L=" << opt.l_max << " grid " << transform->grid().n_lat << "x"
           << transform->grid().n_lon;
        return std::make_tuple(double(opt.l_max), true, os.str());
    });
    if (!transform) {
        // Nothing else can run without a transform.
        return run.results;
    }
    const SphereTransform& t = *transform;

    run.bounded("quadrature.weights_sum_2", 1e-13, [&] {
        double s = 0.0;
        for (double w : t.grid().weights)
            s += w;
        return std::make_pair(std::abs(s - 2.0), std::string("sum of weights"));
    });
    run.predicate("quadrature.nodes_symmetric_positive_weights", [&] {
        const SphericalGrid& g = t.grid();
        double worst = 0.0;
        bool ok = true;
        for (int i = 0; i < g.n_lat; ++i) {
            ok = ok && g.weights[i] > 0.0;
            if (i > 0)
                ok = ok && g.nodes[i] > g.nodes[i - 1];
            worst = std::max(worst, std::abs(g.nodes[i] + g.nodes[g.n_lat - 1 - i]));
        }
        return std::make_tuple(worst, ok && worst <= 1e-13, std::string("node symmetry defect"));
    });
    run.bounded("quadrature.monomial_moments", 1e-12, [&] {
        // spot set: all exponents with a+b+c <= 4 plus a random sample up to L
        std::mt19937 rng(2024);
        std::vector<std::array<int, 3>> cases;
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b)
                for (int c = 0; a + b + c <= 4; ++c)
                    cases.push_back({a, b, c});
        std::uniform_int_distribution<int> pick(0, opt.l_max);
        for (int k = 0; k < 40; ++k) {
            const int a = pick(rng), b = pick(rng), c = pick(rng);
            if (a + b + c <= opt.l_max)
                cases.push_back({a, b, c});
        }
        double worst = 0.0;
        const SphericalGrid& g = t.grid();
        for (auto [a, b, c] : cases) {
            GridField v(g);
            for (int i = 0; i < g.n_lat; ++i) {
                const double z = g.nodes[i];
                const double ct = std::sqrt(1.0 - z * z);
                for (int j = 0; j < g.n_lon; ++j) {
                    const double phi = 2.0 * M_PI * j / g.n_lon;
                    v.at(i, j) = std::pow(ct * std::cos(phi), 2 * a) *
                                 std::pow(ct * std::sin(phi), 2 * b) * std::pow(z, 2 * c);
                }
            }
            worst = std::max(worst, std::abs(t.integrate(v) - monomial_moment(a, b, c)));
        }
        return std::make_pair(worst, std::to_string(cases.size()) + " monomials");
    });
    run.bounded("transform.round_trip", 1e-12, [&] {
        const SpectralField f = random_field(opt.l_max, 81);
        const SpectralField g = t.analyze(t.synthesize(f), opt.l_max);
        double worst = 0.0;
        for (int i = 0; i < f.size(); ++i)
            worst = std::max(worst, std::abs(f.coeffs()[i] - g.coeffs()[i]));
        return std::make_pair(worst, std::string("max coefficient defect"));
    });
    run.bounded("transform.parseval", 1e-11, [&] {
        const SpectralField f = random_field(opt.l_max, 82);
        const SpectralField g = random_field(opt.l_max, 83);
        const double spectral = inner_product(f, g);
        const double grid = t.integrate_product(t.synthesize(f), t.synthesize(g));
        return std::make_pair(std::abs(spectral - grid), std::string("<f,g> grid vs coefficients"));
    });
    run.bounded("transform.green_identity", 1e-11, [&] {
        const SpectralField f = random_field(opt.l_max, 84);
        const SpectralField g = random_field(opt.l_max, 85);
        return std::make_pair(
            std::abs(inner_product(f, laplacian(g)) - inner_product(laplacian(f), g)),
            std::string("<f, Lap g> vs <Lap f, g>"));
    });
    run.bounded("transform.divergence_theorem", 0.0, [&] {
        const SpectralField f = random_field(opt.l_max, 86);
        return std::make_pair(std::abs(laplacian(f).at(0, 0)),
                              std::string("a00 of a Laplacian (exact zero)"));
    });

    run.predicate("group.structure", [&] {
        const RotationGroup g = tetrahedral_group();
        int n3 = 0, n0 = 0, nm1 = 0;
        bool closed = true;
        for (const Rotation& a : g.elements) {
            const double tr = a[0] + a[4] + a[8];
            if (std::abs(tr - 3.0) < 1e-12)
                ++n3;
            else if (std::abs(tr) < 1e-12)
                ++n0;
            else if (std::abs(tr + 1.0) < 1e-12)
                ++nm1;
            for (const Rotation& b : g.elements) {
                Rotation ab{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        for (int k = 0; k < 3; ++k)
                            ab[i * 3 + j] += a[i * 3 + k] * b[k * 3 + j];
                bool found = false;
                for (const Rotation& c : g.elements) {
                    bool eq = true;
                    for (int i = 0; i < 9; ++i)
                        eq = eq && std::abs(ab[i] - c[i]) < 1e-12;
                    found = found || eq;
                }
                closed = closed && found;
            }
        }
        const bool ok = g.elements.size() == 12 && closed && n3 == 1 && n0 == 8 && nm1 == 3;
        return std::make_tuple(double(g.elements.size()), ok,
                               std::string("12 rotations, closure, trace census 1/8/3"));
    });

    std::unique_ptr<TetraProjector> projector;
    run.predicate("symmetry.projector_built", [&] {
        projector = std::make_unique<TetraProjector>(t);
        return std::make_tuple(0.0, true, std::string("grid-space group average"));
    });
    if (!projector)
        return run.results;
    const TetraProjector& proj = *projector;

    run.predicate("symmetry.invariant_dimensions", [&] {
        const bool ok = invariant_dimension(1) == 0 && invariant_dimension(2) == 0 &&
                        invariant_dimension(0) == 1 && invariant_dimension(3) == 1 &&
                        invariant_dimension(4) == 1 && invariant_dimension(6) == 2;
        return std::make_tuple(double(invariant_dimension(6)), ok,
                               std::string("m_l = 0,0,1,1,2 at l = 1,2,3,4,6; m_0 = 1"));
    });
    run.predicate("symmetry.rank_agreement", [&] {
        bool ok = true;
        int upto = std::min(opt.l_max, 12);
        for (int l = 0; l <= upto; ++l)
            ok = ok && proj.projected_rank(l) == invariant_dimension(l);
        return std::make_tuple(double(upto), ok,
                               std::string("projector rank vs character formula, l <= ") +
                                   std::to_string(upto));
    });
    run.bounded("symmetry.projector_idempotent", 1e-11, [&] {
        const SpectralField f = random_field(std::min(opt.l_max, 10), 87);
        const SpectralField pf = proj.project(f);
        return std::make_pair(norm(proj.project(pf) - pf), std::string("||P P f - P f||"));
    });
    run.bounded("symmetry.projector_self_adjoint", 1e-11, [&] {
        const SpectralField f = random_field(std::min(opt.l_max, 10), 88);
        const SpectralField g = random_field(std::min(opt.l_max, 10), 89);
        return std::make_pair(std::abs(inner_product(proj.project(f), g) -
                                       inner_product(f, proj.project(g))),
                              std::string("<Pf,g> vs <f,Pg>"));
    });
    run.bounded("symmetry.low_modes_filtered", 1e-11, [&] {
        SpectralField y10(1);
        y10.at(1, 0) = 1.0;
        SpectralField y21(2);
        y21.at(2, 1) = 1.0;
        return std::make_pair(std::max(norm(proj.project(y10)), norm(proj.project(y21))),
                              std::string("||P Y_1^0||, ||P Y_2^1||"));
    });
    run.bounded("symmetry.y_star", 1e-12, [&] {
        const double unit = std::abs(norm(y_star()) - 1.0);
        const double eig = norm(laplacian(y_star()) + 12.0 * y_star());
        const double fixed = norm(proj.project(y_star()) - y_star());
        return std::make_pair(std::max({unit, eig, fixed / 10.0}),
                              std::string("norm, Lap Y* = -12 Y*, T-invariance"));
    });

    std::unique_ptr<InvariantBasis> basis;
    run.predicate("symmetry.spectral_gap", [&] {
        basis = std::make_unique<InvariantBasis>(proj.invariant_basis(opt.l_max, true));
        int min_ll = 1 << 30;
        for (int d : basis->degree)
            min_ll = std::min(min_ll, d * (d + 1));
        return std::make_tuple(double(min_ll), min_ll == 12,
                               std::string("min l(l+1) over the zero-mean invariant basis"));
    });

    run.bounded("symmetry.y_star_squared_content", 1e-12, [&] {
        const SpectralField ysq = t.product(y_star(), y_star());
        double off = 0.0;
        for (int l = 0; l <= ysq.l_max(); ++l)
            for (int m = -l; m <= l; ++m)
                if (l != 0 && l != 4 && l != 6)
                    off = std::max(off, std::abs(ysq.at(l, m)));
        return std::make_pair(off, std::string("(Y*)^2 off {0,4,6} content (l=2 included)"));
    });

    for (const ProfileModel& m : all_models(opt)) {
        const std::string tag = "model." + model_name(m.kind);
        run.bounded(tag + ".normalization", 1e-12, [&] {
            const double ls = critical_lambda(m);
            const double g0 = std::abs(gamma(m, ls));
            const double d1 = std::abs(12.0 + derivative_bundle(m).d1);
            return std::make_pair(std::max(g0, d1),
                                  std::string("gamma(lambda*) and 12 + dF/dpsi(lambda*,0)"));
        });
        run.bounded(tag + ".derivative_fd", 1e-6, [&] {
            const double ls = critical_lambda(m);
            const DerivativeBundle d = derivative_bundle(m);
            const double h = 1e-6;
            const double gp_fd = (gamma(m, ls + h) - gamma(m, ls - h)) / (2.0 * h);
            double rel = std::abs(gp_fd - d.dl) / std::max(1.0, std::abs(d.dl));
            const double hp = 1e-3;
            GridField psi(t.grid());
            auto dF0 = [&](double v) {
                for (double& x : psi.values)
                    x = v;
                return dpsi_F(m, ls, psi).values[0];
            };
            const double d2_fd = (dF0(hp) - dF0(-hp)) / (2.0 * hp);
            const double d3_fd = (dF0(hp) - 2.0 * dF0(0.0) + dF0(-hp)) / (hp * hp);
            rel = std::max(rel, std::abs(d2_fd - d.d2) / 12.0);
            rel = std::max(rel, std::abs(d3_fd - d.d3) / 12.0);
            return std::make_pair(rel, std::string("gamma', d2, d3 vs central differences"));
        });
    }
    run.bounded("model.exponential.mass_constraint", 1e-12, [&] {
        const SpectralField psi = 0.2 * random_field(std::min(opt.l_max, 6), 90);
        const GridField f = apply_F(ProfileModel::exponential(), -12.0, t.synthesize(psi), t);
        return std::make_pair(std::abs(t.analyze(f, 0).at(0, 0)),
                              std::string("a00 of the constrained nonlinearity"));
    });

    // Branch, potentials, and the central identities per model.
    for (const ProfileModel& m : all_models(opt)) {
        const std::string tag = "model." + model_name(m.kind);
        run.predicate(tag + ".lambda2_sign", [&] {
            const double l2 = compute_lambda2(t, m);
            const int expect = (m.kind == ModelKind::sine_gordon ||
                                m.kind == ModelKind::exponential)
                                   ? 1
                                   : -1;
            const bool ok = (l2 > 0.0) == (expect > 0);
            return std::make_tuple(l2, ok,
                                   std::string("bifurcation direction, expected ") +
                                       (expect > 0 ? "supercritical" : "subcritical"));
        });
        run.bounded(tag + ".branch_invariants", 1e-11, [&] {
            const BranchExpansion b = compute_branch(t, m);
            const double orth = std::abs(inner_product(b.psi2, b.y_star));
            const double inv = norm(proj.project(b.psi2) - b.psi2);
            const double fred =
                std::abs(inner_product(t.product(b.y_star, b.y_star), b.y_star));
            return std::make_pair(std::max({orth, inv, fred}),
                                  std::string("<psi2,Y*>, T-invariance, Fredholm"));
        });
        run.bounded(tag + ".first_order_cancellations", 1e-12, [&] {
            const BranchExpansion b = compute_branch(t, m);
            const PotentialExpansion p = potentials(t, b);
            const SpectralField v1y = t.product(p.v1, b.y_star);
            const double mu1 = std::abs(inner_product(v1y, b.y_star));
            const SpectralField h1y = (-1.0 / 144.0) * laplacian(t.product(p.v1, laplacian(b.y_star)));
            const double eta1 = std::abs(inner_product(h1y, b.y_star));
            return std::make_pair(std::max(mu1, eta1), std::string("|mu1| and |eta1|"));
        });
        run.bounded(tag + ".zero_mean_lemma", 0.0, [&] {
            const BranchExpansion b = compute_branch(t, m);
            const PotentialExpansion p = potentials(t, b);
            return std::make_pair(std::abs(laplacian(t.product(p.v1, b.y_star)).at(0, 0)),
                                  std::string("a00 of Delta(V1 Y*)"));
        });
        run.bounded(tag + ".eta2_identity", 1e-8, [&] {
            const BranchExpansion b = compute_branch(t, m);
            const PotentialExpansion p = potentials(t, b);
            const double mu2 = compute_mu2(t, b, p).mu2;
            const double eta2 = compute_eta2(t, b, p).eta2;
            std::ostringstream os;
            os << "mu2 = " << fmt_sci(mu2) << ", eta2 = " << fmt_sci(eta2);
            return std::make_pair(std::abs(eta2 + mu2) / std::abs(mu2), os.str());
        });
        run.predicate(tag + ".mu2_sign_cr", [&] {
            const BranchExpansion b = compute_branch(t, m);
            const PotentialExpansion p = potentials(t, b);
            const double mu2 = compute_mu2(t, b, p).mu2;
            const double prod = b.lambda2 * gamma_prime(m, b.lambda_star);
            return std::make_tuple(mu2, mu2 * prod < 0.0,
                                   std::string("sign(mu2) = -sign(lambda2 gamma')"));
        });
        run.predicate(tag + ".residual_slopes", [&] {
            const BranchExpansion b = compute_branch(t, m);
            const std::vector<double> eps = {0.04, 0.02, 0.01, 0.005};
            std::vector<double> rn, rp;
            for (double e : eps) {
                const auto [lambda, psi] = branch_at(b, e);
                const SpectralField r = residual(t, m, lambda, psi);
                rn.push_back(norm(r));
                rp.push_back(std::abs(inner_product(r, b.y_star)));
            }
            const double s1 = loglog_slope(eps, rn);
            const double s2 = loglog_slope(eps, rp);
            std::ostringstream os;
            os << "||R|| slope " << fmt_sci(s1) << " (>= 2.7), <R,Y*> slope " << fmt_sci(s2)
               << " (>= 3.7)";
            return std::make_tuple(s1, s1 >= 2.7 && s2 >= 3.7, os.str());
        });
    }

    // Hessian matrix checks (need the basis).
    if (basis) {
        for (const ProfileModel& m : all_models(opt)) {
            const std::string tag = "hessian." + model_name(m.kind);
            run.bounded(tag + ".h0_diagonal", 1e-10, [&] {
                const BranchExpansion b = compute_branch(t, m);
                const HessianMatrix h = assemble_hessian(t, b, 0.0, *basis);
                double worst = 0.0;
                for (int i = 0; i < h.n; ++i)
                    for (int j = 0; j < h.n; ++j) {
                        const double hij = h.entries[static_cast<size_t>(i) * h.n + j];
                        const double want =
                            (i == j) ? unperturbed_hessian_eigenvalue(h.degree[i]) : 0.0;
                        worst = std::max(worst, std::abs(hij - want));
                    }
                return std::make_pair(worst, std::string("H(0) vs eta_l^(0) diagonal"));
            });
            run.bounded(tag + ".symmetry", 1e-10, [&] {
                const BranchExpansion b = compute_branch(t, m);
                const HessianMatrix h = assemble_hessian(t, b, 0.05, *basis);
                return std::make_pair(h.rel_asymmetry,
                                      std::string("relative asymmetry at eps = 0.05"));
            });
            run.predicate(tag + ".gap_persistence", [&] {
                const BranchExpansion b = compute_branch(t, m);
                const HessianMatrix h = assemble_hessian(t, b, 0.05, *basis);
                const SymmetricEigen eig = jacobi_eigen(h.entries, h.n);
                bool ok = true;
                double worst = -1e300;
                for (int k = 0; k < h.n; ++k) {
                    double high = 0.0;
                    for (int i = 0; i < h.n; ++i)
                        if (h.degree[i] >= 4)
                            high += eig.eigenvectors[static_cast<size_t>(i) * h.n + k] *
                                    eig.eigenvectors[static_cast<size_t>(i) * h.n + k];
                    if (high > 0.81) {
                        ok = ok && eig.eigenvalues[k] < -5.0;
                        worst = std::max(worst, eig.eigenvalues[k]);
                    }
                }
                return std::make_tuple(worst, ok,
                                       std::string("l >= 4 dominated eigenvalues below -5"));
            });
            run.predicate(tag + ".eta_curve", [&] {
                const BranchExpansion b = compute_branch(t, m);
                const PotentialExpansion p = potentials(t, b);
                const double eta2 = compute_eta2(t, b, p).eta2;
                const std::vector<double> eps = {0.04, 0.02, 0.01, 0.005};
                std::vector<double> diff;
                bool signs_ok = true;
                for (double e : eps) {
                    const CriticalEigenvalue c =
                        critical_eigenvalue(assemble_hessian(t, b, e, *basis));
                    signs_ok = signs_ok && (c.value > 0.0) == (eta2 > 0.0);
                    diff.push_back(std::abs(c.value - e * e * eta2));
                }
                const double slope = loglog_slope(eps, diff);
                std::ostringstream os;
                os << "|eta(eps) - eps^2 eta2| slope " << fmt_sci(slope) << " (>= 2.7)";
                return std::make_tuple(slope, slope >= 2.7 && signs_ok, os.str());
            });
        }
        run.bounded("hessian.quadratic_form_equivalence", 1e-9, [&] {
            const ProfileModel m = ProfileModel::sine_gordon();
            const BranchExpansion b = compute_branch(t, m);
            const HessianMatrix h = assemble_hessian(t, b, 0.03, *basis);
            std::mt19937 rng(91);
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            std::vector<double> coef(basis->size());
            SpectralField v(opt.l_max);
            for (int i = 0; i < basis->size(); ++i) {
                coef[i] = dist(rng);
                v += coef[i] * basis->vectors[i];
            }
            double quad = 0.0;
            for (int i = 0; i < h.n; ++i)
                for (int j = 0; j < h.n; ++j)
                    quad += coef[i] * h.entries[static_cast<size_t>(i) * h.n + j] * coef[j];
            const double dv = second_variation(t, b, 0.03, v);
            return std::make_pair(std::abs(dv - 0.5 * quad) / std::max(1.0, std::abs(dv)),
                                  std::string("two delta^2 H_C routes vs (1/2) v^T H v"));
        });
    }

    // Classification table.
    run.predicate("classify.table1", [&] {
        if (!basis)
            throw ConsistencyError("no basis available");
        std::vector<TableRow> rows;
        for (const ProfileModel& m : all_models(opt))
            rows.push_back(table_row(classify(t, *basis, m)));
        const auto diffs = table1_diff(rows);
        std::string detail = "sign pattern vs the embedded table";
        if (!diffs.empty())
            detail = diffs.front();
        return std::make_tuple(double(rows.size()), diffs.empty(), detail);
    });

    return run.results;
}

std::string render_verify_json(const VerifyOptions& opt, const std::vector<CheckResult>& checks)
{
    std::ostringstream os;
    int failed = 0;
    for (const CheckResult& c : checks)
        failed += c.pass ? 0 : 1;
    os << "{\n";
    os << "  \"lmax\": " << opt.l_max << ",\n";
    os << "  \"mu\": " << fmt_sci(opt.mu) << ",\n";
    os << "  \"mu1\": " << fmt_sci(opt.mu1) << ",\n";
    os << "  \"checks\": [\n";
    for (size_t i = 0; i < checks.size(); ++i) {
        const CheckResult& c = checks[i];
        os << "    {\"name\": \"" << c.name << "\", \"pass\": " << (c.pass ? "true" : "false")
           << ", \"measured\": ";
        if (std::isfinite(c.measured))
            os << fmt_sci(c.measured);
        else
            os << "null";
        os << ", \"threshold\": " << fmt_sci(c.threshold) << ", \"detail\": \"" << c.detail
           << "\"}" << (i + 1 < checks.size() ? "," : "") << "\n";
    }
    os << "  ],\n";
    os << "  \"total\": " << checks.size() << ",\n";
    os << "  \"failed\": " << failed << ",\n";
    os << "  \"status\": \"" << (failed == 0 ? "pass" : "fail") << "\"\n";
    os << "}\n";
    return os.str();
}

} // namespace tetra
