#pragma once

#include <string>
#include <vector>

namespace knotfill {

/// One reproduction check: a named family of exact assertions.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary when passing
};

struct GridSpec {
    int n_lo = 2, n_hi = 8;        // twisted-family n range
    int m_lo = 1, m_hi = 5;        // twisted-family m range
    int link_n_lo = 1, link_n_hi = 6;  // L_n range
};

/// Names accepted by run_checks / the CLI --scope flag, besides "all".
std::vector<std::string> check_scopes();

/// Runs the verification matrix for one scope ("all" runs everything).
/// Throws std::invalid_argument on an unknown scope.
std::vector<CheckResult> run_checks(const std::string& scope, const GridSpec& grid = {},
                                    int jobs = 1);

}  // namespace knotfill
