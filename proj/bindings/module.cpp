#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tetra/bifurcation.hpp"
#include "tetra/gauss_legendre.hpp"
#include "tetra/jacobi_eigen.hpp"
#include "tetra/report.hpp"
#include "tetra/stability.hpp"
#include "tetra/symmetry.hpp"
#include "tetra/transform.hpp"
#include "tetra/verify.hpp"

#include <memory>

namespace py = pybind11;

namespace {

struct Engine {
    tetra::SphereTransform transform;
    tetra::TetraProjector projector;
    tetra::InvariantBasis basis;

    explicit Engine(int lmax)
        : transform(lmax), projector(transform), basis(projector.invariant_basis(lmax, true))
    {
    }
};

tetra::ProfileModel make_model(const std::string& name, double mu, double mu1)
{
    const tetra::ModelKind kind = tetra::parse_model(name);
    if (kind == tetra::ModelKind::polynomial)
        return tetra::ProfileModel::polynomial(mu, mu1);
    return {kind, 0.0, 0.0};
}

py::dict report_dict(const tetra::StabilityReport& r)
{
    py::dict d;
    d["model"] = tetra::model_name(r.model);
    d["lambda_star"] = r.lambda_star;
    d["gamma_prime"] = r.gamma_prime;
    d["lambda2"] = r.lambda2;
    d["mu2"] = r.mu2;
    d["eta2"] = r.eta2;
    d["eta_at_eps_0_02"] = r.eta_eps;
    d["stable"] = r.stable;
    d["classification"] = r.classification;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Tetrahedral steady flows of the 2D Euler equations on the sphere: "
              "spectral transforms, branch expansion, energy-Casimir stability.";

    m.def(
        "gauss_legendre",
        [](int n) { return tetra::gauss_legendre(n); },
        py::arg("n"), "n-point Gauss-Legendre nodes and weights on (-1, 1)");

    m.def("invariant_dimension", &tetra::invariant_dimension, py::arg("l"),
          "multiplicity of the trivial tetrahedral representation at degree l");

    m.def("unperturbed_hessian_eigenvalue", &tetra::unperturbed_hessian_eigenvalue, py::arg("l"),
          "eta_l^(0) = -(l(l+1)/12)[l(l+1) - 12]");

    m.def(
        "critical_lambda",
        [](const std::string& model, double mu, double mu1) {
            return tetra::critical_lambda(make_model(model, mu, mu1));
        },
        py::arg("model"), py::arg("mu") = 9.0, py::arg("mu1") = 3.0);

    m.def(
        "gamma",
        [](const std::string& model, double lam, double mu, double mu1) {
            return tetra::gamma(make_model(model, mu, mu1), lam);
        },
        py::arg("model"), py::arg("lambda_"), py::arg("mu") = 9.0, py::arg("mu1") = 3.0,
        "trivial-branch eigenvalue gamma(lambda) = 12 + dF/dpsi(lambda, 0)");

    m.def(
        "expand",
        [](const std::string& model, int lmax, double mu, double mu1) {
            const tetra::ProfileModel pm = make_model(model, mu, mu1);
            tetra::SphereTransform t(lmax);
            const tetra::BranchExpansion b = tetra::compute_branch(t, pm);
            const tetra::PotentialExpansion p = tetra::potentials(t, b);
            py::dict d;
            d["model"] = tetra::model_name(pm.kind);
            d["lambda_star"] = b.lambda_star;
            d["gamma_prime"] = tetra::gamma_prime(pm, b.lambda_star);
            d["lambda2"] = b.lambda2;
            d["psi2_norm"] = tetra::norm(b.psi2);
            d["mu2"] = tetra::compute_mu2(t, b, p).mu2;
            d["eta2"] = tetra::compute_eta2(t, b, p).eta2;
            return d;
        },
        py::arg("model"), py::arg("lmax") = 20, py::arg("mu") = 9.0, py::arg("mu1") = 3.0,
        "branch and eigenvalue expansion data: lambda*, gamma', lambda2, "
        "||psi2||, mu2, eta2");

    m.def(
        "classify",
        [](const std::string& model, int lmax, double mu, double mu1) {
            Engine eng(lmax);
            return report_dict(
                tetra::classify(eng.transform, eng.basis, make_model(model, mu, mu1)));
        },
        py::arg("model"), py::arg("lmax") = 20, py::arg("mu") = 9.0, py::arg("mu1") = 3.0,
        "full stability report with cross-checks");

    m.def(
        "table1",
        [](int lmax, double mu, double mu1) {
            Engine eng(lmax);
            py::list rows;
            for (const char* name :
                 {"polynomial", "sine-gordon", "sinh-gordon", "exponential"})
                rows.append(report_dict(
                    tetra::classify(eng.transform, eng.basis, make_model(name, mu, mu1))));
            return rows;
        },
        py::arg("lmax") = 20, py::arg("mu") = 9.0, py::arg("mu1") = 3.0,
        "stability classification of all four models");

    m.def(
        "eta_curve",
        [](const std::string& model, const std::vector<double>& epsilons, int lmax, double mu,
           double mu1) {
            Engine eng(lmax);
            const tetra::BranchExpansion b =
                tetra::compute_branch(eng.transform, make_model(model, mu, mu1));
            std::vector<double> out;
            for (double e : epsilons)
                out.push_back(tetra::critical_eigenvalue(
                                  tetra::assemble_hessian(eng.transform, b, e, eng.basis))
                                  .value);
            return out;
        },
        py::arg("model"), py::arg("epsilons"), py::arg("lmax") = 20, py::arg("mu") = 9.0,
        py::arg("mu1") = 3.0, "tracked critical Hessian eigenvalue along the branch");

    m.def(
        "hessian_spectrum",
        [](const std::string& model, double epsilon, int lmax, double mu, double mu1) {
            Engine eng(lmax);
            const tetra::BranchExpansion b =
                tetra::compute_branch(eng.transform, make_model(model, mu, mu1));
            const tetra::HessianMatrix h =
                tetra::assemble_hessian(eng.transform, b, epsilon, eng.basis);
            std::vector<double> ev = tetra::jacobi_eigen(h.entries, h.n).eigenvalues;
            std::sort(ev.begin(), ev.end());
            return ev;
        },
        py::arg("model"), py::arg("epsilon"), py::arg("lmax") = 20, py::arg("mu") = 9.0,
        py::arg("mu1") = 3.0, "sorted eigenvalues of the assembled Hessian");

    m.def(
        "residual_norms",
        [](const std::string& model, const std::vector<double>& epsilons, int lmax, double mu,
           double mu1) {
            tetra::SphereTransform t(lmax);
            const tetra::BranchExpansion b = tetra::compute_branch(t, make_model(model, mu, mu1));
            std::vector<std::pair<double, double>> out;
            for (double e : epsilons) {
                const auto [lambda, psi] = tetra::branch_at(b, e);
                const tetra::SpectralField r = tetra::residual(t, b.model, lambda, psi);
                out.emplace_back(tetra::norm(r),
                                 std::abs(tetra::inner_product(r, b.y_star)));
            }
            return out;
        },
        py::arg("model"), py::arg("epsilons"), py::arg("lmax") = 20, py::arg("mu") = 9.0,
        py::arg("mu1") = 3.0,
        "(||R||, |<R, Y*>|) of the stationary equation along the branch");

    m.def(
        "verify",
        [](int lmax, double mu, double mu1) {
            tetra::VerifyOptions opt;
            opt.l_max = lmax;
            opt.mu = mu;
            opt.mu1 = mu1;
            py::list out;
            for (const tetra::CheckResult& c : tetra::run_verify(opt)) {
                py::dict d;
                d["name"] = c.name;
                d["pass"] = c.pass;
                d["measured"] = c.measured;
                d["threshold"] = c.threshold;
                d["detail"] = c.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("lmax") = 20, py::arg("mu") = 9.0, py::arg("mu1") = 3.0,
        "run the invariant suite, one dict per check");

    m.attr("__version__") = "0.1.0";
}
