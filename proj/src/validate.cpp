#include "secrelay/validate.hpp"

#include "secrelay/monte_carlo.hpp"
#include "secrelay/secrecy.hpp"
#include "secrelay/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace secrelay {

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string point_label(double power, double delta, int n_eve) {
    return "P=" + format_double(power) + "dBm delta=" + format_double(delta) + "dB n_eve=" + std::to_string(n_eve);
}

void add(ValidationReport& r, std::string name, double measured, double tol) {
    r.checks.push_back(CheckResult{std::move(name), measured, tol, measured <= tol});
}

Endpoints shifted(Endpoints ep, double dr, double db, double de) {
    ep.gamma_r.mu += dr;
    ep.gamma_b.mu += db;
    ep.gamma_e.mu += de;
    return ep;
}

} // namespace

ValidationReport validate_config(const ExperimentConfig& cfg) {
    ValidationReport report;
    const int order = cfg.system.quadrature_order;
    std::uint64_t stream = 0;
    for (double power : cfg.power_grid_dbm) {
        for (double delta : cfg.delta_grid_db) {
            for (int n_eve : cfg.n_eve_grid) {
                const auto label = point_label(power, delta, n_eve);
                const SystemConfig sys = cfg.at(power, delta, n_eve);
                const Endpoints ep = endpoints_for(sys);

                const double rate_q = avg_secrecy_rate(ep, order).value;
                const double rate_ref = avg_secrecy_rate_reference(ep, 1e-10).value;
                const double rate_dev = rate_ref > 0.0 ? std::abs(rate_q - rate_ref) / rate_ref : std::abs(rate_q);
                add(report, "rate quadrature(K=" + std::to_string(order) + ") vs reference, rel. [" + label + "]",
                    rate_dev, kRateAgreementTol);

                std::vector<double> out_ref;
                for (double rs : cfg.rs_grid) {
                    const double q = secrecy_outage(ep, rs, order).value;
                    const double ref = secrecy_outage_reference(ep, rs, 1e-10).value;
                    out_ref.push_back(ref);
                    add(report,
                        "outage quadrature(K=" + std::to_string(order) + ") vs reference, abs. [" + label +
                            " rs=" + format_double(rs) + "]",
                        std::abs(q - ref), kOutageAgreementTol);
                }

                const auto mc_rate = mc::mc_avg_secrecy_rate(sys, mc::Mode::ln_fit, cfg.samples, cfg.seed, stream);
                add(report, "rate mc-ln vs reference, std errors [" + label + "]",
                    std::abs(mc_rate.mean - rate_ref) / std::max(mc_rate.std_error, 1e-300), kMcSigmaBound);
                const auto mc_out = mc::mc_secrecy_outage(sys, cfg.rs_grid, mc::Mode::ln_fit, cfg.samples, cfg.seed, stream);
                for (std::size_t i = 0; i < cfg.rs_grid.size(); ++i) {
                    // A zero standard error only happens at p in {0, 1}; then demand exact agreement
                    // up to the binomial resolution 1/n.
                    const double se = std::max(mc_out[i].std_error, 1.0 / static_cast<double>(cfg.samples));
                    add(report,
                        "outage mc-ln vs reference, std errors [" + label + " rs=" + format_double(cfg.rs_grid[i]) + "]",
                        std::abs(mc_out[i].mean - out_ref[i]) / se, kMcSigmaBound);
                }
                ++stream;

                // Estimator monotonicity under +0.5 nat shifts of each endpoint.
                constexpr double h = 0.5;
                double violation = 0.0;
                const double r0 = rate_q;
                violation = std::max(violation, avg_secrecy_rate(shifted(ep, 0, 0, h), order).value - r0);
                violation = std::max(violation, r0 - avg_secrecy_rate(shifted(ep, 0, h, 0), order).value);
                violation = std::max(violation, r0 - avg_secrecy_rate(shifted(ep, h, 0, 0), order).value);
                for (double rs : cfg.rs_grid) {
                    const double o0 = secrecy_outage(ep, rs, order).value;
                    violation = std::max(violation, o0 - secrecy_outage(ep, 2.0 * rs, order).value);
                    violation = std::max(violation, o0 - secrecy_outage(shifted(ep, 0, 0, h), rs, order).value);
                    violation = std::max(violation, secrecy_outage(shifted(ep, 0, h, 0), rs, order).value - o0);
                    violation = std::max(violation, secrecy_outage(shifted(ep, h, 0, 0), rs, order).value - o0);
                }
                add(report, "estimator monotonicity, max violation [" + label + "]", violation, 0.0);

                double identity = 0.0;
                for (double lz = -10.0; lz <= 10.0; lz += 0.5) {
                    const double z = std::exp(lz);
                    const double fr = cdf(ep.gamma_r, z);
                    const double fb = cdf(ep.gamma_b, z);
                    identity = std::max(identity, std::abs(cdf_gamma_fd(ep, z) - (fr + fb - fr * fb)));
                }
                add(report, "min-CDF identity, max abs. deviation [" + label + "]", identity, 1e-12);
            }
        }
    }
    return report;
}

void print_report(const ValidationReport& report, std::ostream& out) {
    int failed = 0;
    for (const auto& c : report.checks) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "measured %.3e, tol %.1e", c.measured, c.tolerance);
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << buf << '\n';
        failed += c.passed ? 0 : 1;
    }
    out << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                        : std::to_string(failed) + " of " + std::to_string(report.checks.size()) + " checks failed")
        << '\n';
}

} // namespace secrelay
