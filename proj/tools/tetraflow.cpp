// tetraflow: constructs tetrahedral-symmetric steady states of the 2D Euler
// equations on the sphere near the first symmetric bifurcation and classifies
// their formal (energy-Casimir) stability.
//
// Subcommands: table1, verify, sweep, expand, hessian.
// Exit codes: 0 success, 1 verification failure, 2 table mismatch, 64 usage.

#include "CLI11.hpp"
#include "json.hpp"

#include "tetra/bifurcation.hpp"
#include "tetra/errors.hpp"
#include "tetra/jacobi_eigen.hpp"
#include "tetra/report.hpp"
#include "tetra/stability.hpp"
#include "tetra/symmetry.hpp"
#include "tetra/transform.hpp"
#include "tetra/verify.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitTableMismatch = 2;
constexpr int kExitUsage = 64;

struct CliConfig {
    std::string model = "all";
    int lmax = 20;
    double epsilon = 0.02;
    std::string epsilon_range; // "A:B:STEPS", geometric spacing
    double mu = 9.0;
    double mu1 = 3.0;
    std::string format; // per-command default when empty
    std::string out;
    std::string config_path;
};

struct CliOptions {
    CLI::Option* model = nullptr;
    CLI::Option* lmax = nullptr;
    CLI::Option* epsilon = nullptr;
    CLI::Option* epsilon_range = nullptr;
    CLI::Option* mu = nullptr;
    CLI::Option* mu1 = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* out = nullptr;
};

CliOptions add_common_options(CLI::App* cmd, CliConfig& cfg)
{
    CliOptions opts;
    opts.model = cmd->add_option("--model", cfg.model,
                                 "polynomial|sine-gordon|sinh-gordon|exponential|all");
    opts.lmax = cmd->add_option("--lmax", cfg.lmax, "spectral band limit (guaranteed >= 8)");
    opts.epsilon = cmd->add_option("--epsilon", cfg.epsilon, "branch amplitude, in (0, 0.5]");
    opts.epsilon_range = cmd->add_option("--epsilon-range", cfg.epsilon_range,
                                         "A:B:STEPS geometric amplitude sweep");
    opts.mu = cmd->add_option("--mu", cfg.mu, "polynomial constant mu > 0");
    opts.mu1 = cmd->add_option("--mu1", cfg.mu1, "polynomial constant mu1 > 0");
    opts.format = cmd->add_option("--format", cfg.format, "json|csv|markdown");
    opts.out = cmd->add_option("--out", cfg.out, "output path (default stdout)");
    cmd->add_option("--config", cfg.config_path, "JSON config file (flags take precedence)");
    return opts;
}

/// Flags override the config file: only fields whose flag was not passed are
/// filled from JSON.
void apply_config_file(const CliConfig& fromFile, const CliOptions& opts, CliConfig& cfg)
{
    if (!opts.model->count())
        cfg.model = fromFile.model;
    if (!opts.lmax->count())
        cfg.lmax = fromFile.lmax;
    if (!opts.epsilon->count())
        cfg.epsilon = fromFile.epsilon;
    if (!opts.epsilon_range->count())
        cfg.epsilon_range = fromFile.epsilon_range;
    if (!opts.mu->count())
        cfg.mu = fromFile.mu;
    if (!opts.mu1->count())
        cfg.mu1 = fromFile.mu1;
    if (!opts.format->count())
        cfg.format = fromFile.format;
    if (!opts.out->count())
        cfg.out = fromFile.out;
}

CliConfig load_config_file(const std::string& path, const CliConfig& defaults)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    nlohmann::json j;
    in >> j;
    CliConfig cfg = defaults;
    if (j.contains("model"))
        cfg.model = j["model"].get<std::string>();
    if (j.contains("lmax"))
        cfg.lmax = j["lmax"].get<int>();
    if (j.contains("epsilon"))
        cfg.epsilon = j["epsilon"].get<double>();
    if (j.contains("epsilon_range"))
        cfg.epsilon_range = j["epsilon_range"].get<std::string>();
    if (j.contains("mu"))
        cfg.mu = j["mu"].get<double>();
    if (j.contains("mu1"))
        cfg.mu1 = j["mu1"].get<double>();
    if (j.contains("format"))
        cfg.format = j["format"].get<std::string>();
    if (j.contains("out"))
        cfg.out = j["out"].get<std::string>();
    return cfg;
}

std::vector<tetra::ProfileModel> selected_models(const CliConfig& cfg)
{
    using tetra::ProfileModel;
    if (cfg.model == "all")
        return {ProfileModel::polynomial(cfg.mu, cfg.mu1), ProfileModel::sine_gordon(),
                ProfileModel::sinh_gordon(), ProfileModel::exponential()};
    const tetra::ModelKind kind = tetra::parse_model(cfg.model);
    if (kind == tetra::ModelKind::polynomial)
        return {ProfileModel::polynomial(cfg.mu, cfg.mu1)};
    return {{kind, 0.0, 0.0}};
}

void validate(const CliConfig& cfg, bool needs_single_model)
{
    if (cfg.lmax < 3)
        throw std::invalid_argument("lmax must be at least 3");
    if (cfg.model != "all")
        tetra::parse_model(cfg.model); // throws on unknown names
    if (cfg.model == "all" || cfg.model == "polynomial") {
        if (!(cfg.mu > 0.0) || !(cfg.mu1 > 0.0))
            throw std::invalid_argument("polynomial parameters must be positive");
    }
    if (!(cfg.epsilon > 0.0) || cfg.epsilon > 0.5)
        throw std::invalid_argument("epsilon must lie in (0, 0.5]");
    if (needs_single_model && cfg.model == "all")
        throw std::invalid_argument("this command needs a single --model");
    if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "csv" &&
        cfg.format != "markdown")
        throw std::invalid_argument("format must be json, csv or markdown");
}

std::vector<double> epsilon_list(const CliConfig& cfg)
{
    if (cfg.epsilon_range.empty())
        return {0.005, 0.01, 0.02, 0.04};
    double a = 0.0, b = 0.0;
    int steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(cfg.epsilon_range);
    if (!(is >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':')
        throw std::invalid_argument("epsilon range must be A:B:STEPS");
    if (!(a > 0.0) || !(b >= a) || b > 0.5 || steps < 2)
        throw std::invalid_argument("epsilon range must satisfy 0 < A <= B <= 0.5, STEPS >= 2");
    std::vector<double> eps(steps);
    const double ratio = std::pow(b / a, 1.0 / (steps - 1));
    for (int i = 0; i < steps; ++i)
        eps[i] = a * std::pow(ratio, i);
    return eps;
}

int write_output(const CliConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write '" << cfg.out << "'\n";
        return kExitVerifyFail;
    }
    f << text;
    return kExitOk;
}

struct Engine {
    tetra::SphereTransform transform;
    tetra::TetraProjector projector;
    tetra::InvariantBasis basis;

    explicit Engine(int lmax)
        : transform(lmax), projector(transform), basis(projector.invariant_basis(lmax, true))
    {
    }
};

int cmd_table1(const CliConfig& cfg)
{
    Engine eng(cfg.lmax);
    std::vector<tetra::TableRow> rows;
    for (const tetra::ProfileModel& m : selected_models(cfg))
        rows.push_back(tetra::table_row(tetra::classify(eng.transform, eng.basis, m)));
    const std::string format = cfg.format.empty() ? "markdown" : cfg.format;
    std::string text;
    if (format == "markdown")
        text = tetra::render_table1_markdown(rows);
    else if (format == "csv")
        text = tetra::render_table1_csv(rows);
    else
        text = tetra::render_table1_json(rows);
    const int rc = write_output(cfg, text);
    if (rc != kExitOk)
        return rc;
    const auto diffs = tetra::table1_diff(rows);
    if (!diffs.empty()) {
        for (const std::string& d : diffs)
            std::cerr << "table1 mismatch: " << d << "\n";
        return kExitTableMismatch;
    }
    return kExitOk;
}

int cmd_verify(const CliConfig& cfg)
{
    tetra::VerifyOptions opt;
    opt.l_max = cfg.lmax;
    opt.mu = cfg.mu;
    opt.mu1 = cfg.mu1;
    const std::vector<tetra::CheckResult> checks = tetra::run_verify(opt);
    const int rc = write_output(cfg, tetra::render_verify_json(opt, checks));
    if (rc != kExitOk)
        return rc;
    for (const tetra::CheckResult& c : checks)
        if (!c.pass)
            return kExitVerifyFail;
    return kExitOk;
}

int cmd_sweep(const CliConfig& cfg)
{
    Engine eng(cfg.lmax);
    const tetra::ProfileModel m = selected_models(cfg).front();
    const tetra::BranchExpansion b = tetra::compute_branch(eng.transform, m);
    const tetra::PotentialExpansion p = tetra::potentials(eng.transform, b);
    const double eta2 = tetra::compute_eta2(eng.transform, b, p).eta2;
    std::ostringstream os;
    os << "epsilon,eta_eps,eps2_eta2,abs_diff\n";
    for (double e : epsilon_list(cfg)) {
        const tetra::CriticalEigenvalue c =
            tetra::critical_eigenvalue(tetra::assemble_hessian(eng.transform, b, e, eng.basis));
        const double pred = e * e * eta2;
        os << tetra::fmt_sci(e) << "," << tetra::fmt_sci(c.value) << "," << tetra::fmt_sci(pred)
           << "," << tetra::fmt_sci(std::abs(c.value - pred)) << "\n";
    }
    return write_output(cfg, os.str());
}

int cmd_expand(const CliConfig& cfg)
{
    Engine eng(cfg.lmax);
    const tetra::ProfileModel m = selected_models(cfg).front();
    const tetra::BranchExpansion b = tetra::compute_branch(eng.transform, m);
    const tetra::PotentialExpansion p = tetra::potentials(eng.transform, b);
    const double mu2 = tetra::compute_mu2(eng.transform, b, p).mu2;
    const double eta2 = tetra::compute_eta2(eng.transform, b, p).eta2;
    const double gp = tetra::gamma_prime(m, b.lambda_star);

    struct KV {
        const char* key;
        std::string value;
        bool quoted;
    };
    const std::vector<KV> items = {
        {"model", tetra::model_name(m.kind), true},
        {"lambda_star", tetra::fmt_sci(b.lambda_star), false},
        {"gamma_prime", tetra::fmt_sci(gp), false},
        {"lambda2", tetra::fmt_sci(b.lambda2), false},
        {"psi2_norm", tetra::fmt_sci(tetra::norm(b.psi2)), false},
        {"mu2", tetra::fmt_sci(mu2), false},
        {"eta2", tetra::fmt_sci(eta2), false},
    };
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    std::ostringstream os;
    if (format == "json") {
        os << "{\n";
        for (size_t i = 0; i < items.size(); ++i) {
            os << "  \"" << items[i].key << "\": ";
            if (items[i].quoted)
                os << "\"" << items[i].value << "\"";
            else
                os << items[i].value;
            os << (i + 1 < items.size() ? "," : "") << "\n";
        }
        os << "}\n";
    } else if (format == "csv") {
        os << "quantity,value\n";
        for (const KV& kv : items)
            os << kv.key << "," << kv.value << "\n";
    } else {
        os << "| quantity | value |\n|---|---|\n";
        for (const KV& kv : items)
            os << "| " << kv.key << " | " << kv.value << " |\n";
    }
    return write_output(cfg, os.str());
}

int cmd_hessian(const CliConfig& cfg)
{
    Engine eng(cfg.lmax);
    const tetra::ProfileModel m = selected_models(cfg).front();
    const tetra::BranchExpansion b = tetra::compute_branch(eng.transform, m);
    const tetra::HessianMatrix h =
        tetra::assemble_hessian(eng.transform, b, cfg.epsilon, eng.basis);
    const tetra::SymmetricEigen eig = tetra::jacobi_eigen(h.entries, h.n);
    int idx3 = 0;
    for (int i = 0; i < h.n; ++i)
        if (h.degree[i] == 3)
            idx3 = i;
    std::vector<int> order(h.n);
    for (int i = 0; i < h.n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b2) { return eig.eigenvalues[a] < eig.eigenvalues[b2]; });
    std::ostringstream os;
    os << "index,eigenvalue,dominant_degree,y_star_overlap\n";
    for (int rank = 0; rank < h.n; ++rank) {
        const int k = order[rank];
        int dom = 0;
        double best = -1.0;
        for (int i = 0; i < h.n; ++i) {
            const double a = std::abs(eig.eigenvectors[static_cast<size_t>(i) * h.n + k]);
            if (a > best) {
                best = a;
                dom = h.degree[i];
            }
        }
        const double overlap = std::abs(eig.eigenvectors[static_cast<size_t>(idx3) * h.n + k]);
        os << rank << "," << tetra::fmt_sci(eig.eigenvalues[k]) << "," << dom << ","
           << tetra::fmt_sci(overlap) << "\n";
    }
    return write_output(cfg, os.str());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tetrahedral steady flows of the 2D Euler equations on the sphere: "
                 "branch expansion and energy-Casimir stability"};
    app.require_subcommand(1);

    CliConfig cfg;
    CLI::App* table1 = app.add_subcommand("table1", "stability classification of all models");
    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    CLI::App* sweep = app.add_subcommand("sweep", "critical Hessian eigenvalue vs amplitude");
    CLI::App* expand = app.add_subcommand("expand", "branch and eigenvalue expansion data");
    CLI::App* hessian = app.add_subcommand("hessian", "Hessian spectrum at one amplitude");
    CliOptions o_table1 = add_common_options(table1, cfg);
    CliOptions o_verify = add_common_options(verify, cfg);
    CliOptions o_sweep = add_common_options(sweep, cfg);
    CliOptions o_expand = add_common_options(expand, cfg);
    CliOptions o_hessian = add_common_options(hessian, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    CLI::App* active = app.get_subcommands().front();
    const CliOptions& opts = active == table1   ? o_table1
                             : active == verify ? o_verify
                             : active == sweep  ? o_sweep
                             : active == expand ? o_expand
                                                : o_hessian;
    try {
        if (!cfg.config_path.empty())
            apply_config_file(load_config_file(cfg.config_path, CliConfig{}), opts, cfg);
        const bool single = (active == sweep || active == expand || active == hessian);
        validate(cfg, single);
        if (!cfg.epsilon_range.empty())
            epsilon_list(cfg); // validates the range format
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: bad config file: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (active == table1)
            return cmd_table1(cfg);
        if (active == verify)
            return cmd_verify(cfg);
        if (active == sweep)
            return cmd_sweep(cfg);
        if (active == expand)
            return cmd_expand(cfg);
        return cmd_hessian(cfg);
    } catch (const tetra::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
