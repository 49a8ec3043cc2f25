#include "tetra/report.hpp"

#include <cstdio>
#include <sstream>

namespace tetra {

std::string fmt_sci(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", x);
    return buf;
}

std::string sign_str(double x)
{
    if (x > 0.0)
        return "+";
    if (x < 0.0)
        return "-";
    return "0";
}

TableRow table_row(const StabilityReport& r)
{
    auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };
    return {model_name(r.model), r.lambda_star, sgn(r.gamma_prime), sgn(r.lambda2), sgn(r.mu2),
            r.classification};
}

const std::vector<TableRow>& expected_table1()
{
    static const std::vector<TableRow> expected = {
        {"polynomial", 0.0, +1, -1, +1, "Stable (Maximum)"},
        {"sine-gordon", 12.0, -1, +1, +1, "Stable (Maximum)"},
        {"sinh-gordon", 12.0, -1, -1, -1, "Unstable (Saddle)"},
        {"exponential", -12.0, +1, +1, -1, "Unstable (Saddle)"},
    };
    return expected;
}

std::vector<std::string> table1_diff(const std::vector<TableRow>& rows)
{
    std::vector<std::string> diffs;
    for (const TableRow& row : rows) {
        const TableRow* exp = nullptr;
        for (const TableRow& e : expected_table1())
            if (e.model == row.model)
                exp = &e;
        if (!exp) {
            diffs.push_back(row.model + ": not in the expected table");
            continue;
        }
        auto mismatch = [&](const char* what, int got, int want) {
            diffs.push_back(row.model + ": " + what + " sign is " +
                            (got > 0 ? "+" : got < 0 ? "-" : "0") + ", expected " +
                            (want > 0 ? "+" : "-"));
        };
        if (row.gamma_prime_sign != exp->gamma_prime_sign)
            mismatch("gamma'", row.gamma_prime_sign, exp->gamma_prime_sign);
        if (row.lambda2_sign != exp->lambda2_sign)
            mismatch("lambda2", row.lambda2_sign, exp->lambda2_sign);
        if (row.mu2_sign != exp->mu2_sign)
            mismatch("mu2", row.mu2_sign, exp->mu2_sign);
        if (row.classification != exp->classification)
            diffs.push_back(row.model + ": classified '" + row.classification + "', expected '" +
                            exp->classification + "'");
    }
    return diffs;
}

std::string render_table1_markdown(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << "| model | lambda_star | gamma_prime | lambda2 | mu2 | classification |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const TableRow& r : rows)
        os << "| " << r.model << " | " << fmt_sci(r.lambda_star) << " | "
           << (r.gamma_prime_sign > 0 ? "+" : "-") << " | " << (r.lambda2_sign > 0 ? "+" : "-")
           << " | " << (r.mu2_sign > 0 ? "+" : "-") << " | " << r.classification << " |\n";
    return os.str();
}

std::string render_table1_csv(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << "model,lambda_star,gamma_prime,lambda2,mu2,classification\n";
    for (const TableRow& r : rows)
        os << r.model << "," << fmt_sci(r.lambda_star) << ","
           << (r.gamma_prime_sign > 0 ? "+" : "-") << "," << (r.lambda2_sign > 0 ? "+" : "-")
           << "," << (r.mu2_sign > 0 ? "+" : "-") << "," << r.classification << "\n";
    return os.str();
}

std::string render_table1_json(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << "{\n  \"table1\": [\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const TableRow& r = rows[i];
        os << "    {\"model\": \"" << r.model << "\", \"lambda_star\": " << fmt_sci(r.lambda_star)
           << ", \"gamma_prime_sign\": \"" << (r.gamma_prime_sign > 0 ? "+" : "-")
           << "\", \"lambda2_sign\": \"" << (r.lambda2_sign > 0 ? "+" : "-")
           << "\", \"mu2_sign\": \"" << (r.mu2_sign > 0 ? "+" : "-")
           << "\", \"classification\": \"" << r.classification << "\"}"
           << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

namespace {

struct Item {
    const char* key;
    std::string value;
    bool quoted;
};

std::vector<Item> report_items(const StabilityReport& r)
{
    std::vector<Item> items;
    items.push_back({"model", model_name(r.model), true});
    if (r.model == ModelKind::polynomial) {
        items.push_back({"mu", fmt_sci(r.mu), false});
        items.push_back({"mu1", fmt_sci(r.mu1_param), false});
    }
    items.push_back({"lambda_star", fmt_sci(r.lambda_star), false});
    items.push_back({"gamma_prime", fmt_sci(r.gamma_prime), false});
    items.push_back({"lambda2", fmt_sci(r.lambda2), false});
    items.push_back({"mu2", fmt_sci(r.mu2), false});
    items.push_back({"eta2", fmt_sci(r.eta2), false});
    items.push_back({"eta_at_eps_0.02", fmt_sci(r.eta_eps), false});
    items.push_back({"max_eigenvalue_l_ge_4", fmt_sci(r.max_high_mode), false});
    items.push_back({"sign_lambda2_gamma_prime", r.sign_product > 0 ? "+" : "-", true});
    items.push_back({"classification", r.classification, true});
    return items;
}

} // namespace

std::string render_report_markdown(const StabilityReport& r)
{
    std::ostringstream os;
    os << "| quantity | value |\n|---|---|\n";
    for (const Item& it : report_items(r))
        os << "| " << it.key << " | " << it.value << " |\n";
    return os.str();
}

std::string render_report_csv(const StabilityReport& r)
{
    std::ostringstream os;
    os << "quantity,value\n";
    for (const Item& it : report_items(r))
        os << it.key << "," << it.value << "\n";
    return os.str();
}

std::string render_report_json(const StabilityReport& r)
{
    std::ostringstream os;
    os << "{\n";
    const auto items = report_items(r);
    for (size_t i = 0; i < items.size(); ++i) {
        os << "  \"" << items[i].key << "\": ";
        if (items[i].quoted)
            os << "\"" << items[i].value << "\"";
        else
            os << items[i].value;
        os << (i + 1 < items.size() ? "," : "") << "\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace tetra
