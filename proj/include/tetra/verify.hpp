#pragma once

#include "tetra/models.hpp"

#include <string>
#include <vector>

namespace tetra {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // NaN when a check aborted before measuring
    double threshold = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int l_max = 20;
    double mu = 9.0;
    double mu1 = 3.0;
};

/// The full invariant suite: transform round-trips, quadrature exactness,
/// group and projector checks, model normalizations, first-order
/// cancellations, the eta2 = -mu2 identity, residual and eigenvalue-curve
/// slopes, Hessian symmetry and gap persistence. Library errors raised inside
/// a check are recorded as failures with the error text.
std::vector<CheckResult> run_verify(const VerifyOptions& opt);

/// JSON rendering with deterministic formatting.
std::string render_verify_json(const VerifyOptions& opt, const std::vector<CheckResult>& checks);

} // namespace tetra
