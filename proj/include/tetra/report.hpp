#pragma once

#include "tetra/stability.hpp"

#include <string>
#include <vector>

namespace tetra {

/// Fixed 12-significant-digit scientific formatting, locale-independent.
/// All floats in reports go through this so identical configs produce
/// byte-identical output.
std::string fmt_sci(double x);

/// "+", "-" or "0".
std::string sign_str(double x);

/// One Table-1 row worth of signs.
struct TableRow {
    std::string model;
    double lambda_star;
    int gamma_prime_sign;
    int lambda2_sign;
    int mu2_sign;
    std::string classification;
};

TableRow table_row(const StabilityReport& r);

/// Embedded expected sign pattern; table1 doubles as a regression gate.
const std::vector<TableRow>& expected_table1();

/// Rows where the computed signs/classification differ from the expected
/// pattern; empty means reproduction succeeded.
std::vector<std::string> table1_diff(const std::vector<TableRow>& rows);

std::string render_table1_markdown(const std::vector<TableRow>& rows);
std::string render_table1_csv(const std::vector<TableRow>& rows);
std::string render_table1_json(const std::vector<TableRow>& rows);

std::string render_report_markdown(const StabilityReport& r);
std::string render_report_csv(const StabilityReport& r);
std::string render_report_json(const StabilityReport& r);

} // namespace tetra
