#pragma once

#include "secrelay/config.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace secrelay {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

inline constexpr double kRateAgreementTol = 1e-6;   // relative
inline constexpr double kOutageAgreementTol = 1e-8; // absolute
inline constexpr double kMcSigmaBound = 3.0;        // standard errors

// Per grid point of the config: quadrature vs reference for both metrics,
// mc-ln vs reference, estimator monotonicity, and the min-CDF identity.
ValidationReport validate_config(const ExperimentConfig& cfg);

void print_report(const ValidationReport& report, std::ostream& out);

} // namespace secrelay
