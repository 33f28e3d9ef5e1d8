#include "secrelay/secrecy.hpp"

#include "secrelay/error.hpp"
#include "secrelay/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace secrelay {

namespace {

using numerics::erfc;
using std::numbers::sqrt2;

void require_spread(const LogNormalRV& rv, const char* name) {
    validate(rv);
    if (!(rv.sigma > 0.0)) {
        throw DomainError(std::string(name) + " must have sigma > 0");
    }
}

void require_all(const Endpoints& ep) {
    require_spread(ep.gamma_r, "gamma_r");
    require_spread(ep.gamma_b, "gamma_b");
    require_spread(ep.gamma_e, "gamma_e");
}

// erfc((ln z - mu) / (sqrt2 sigma)), i.e. twice the LN survival function.
double upper_erfc(const LogNormalRV& rv, double log_z) {
    return erfc((log_z - rv.mu) / (sqrt2 * rv.sigma));
}

double log_add_exp(double a, double b) {
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// ln of e^{mu +- j sigma} breakpoints for the reference integrators.
void add_breakpoints(std::vector<double>& out, const LogNormalRV& rv) {
    for (int j = -8; j <= 8; j += 2) {
        const double z = std::exp(rv.mu + j * rv.sigma);
        if (std::isfinite(z) && z > 0.0) {
            out.push_back(z);
        }
    }
}

// Pr[X > z] as the CDF of 1/X at 1/z, so tails keep full relative precision.
double ln_survival(const LogNormalRV& rv, double z) {
    const double inv = 1.0 / z;
    return std::isinf(inv) ? 1.0 : cdf(LogNormalRV{-rv.mu, rv.sigma}, inv);
}

MetricResult clamp_probability(MetricResult r) {
    if (r.value < 0.0 || r.value > 1.0) {
        r.note = "clamped from " + std::to_string(r.value);
        r.value = std::clamp(r.value, 0.0, 1.0);
    }
    return r;
}

} // namespace

double cdf_gamma_fd(const Endpoints& ep, double z) {
    if (std::isnan(z) || z < 0.0) {
        throw DomainError("cdf_gamma_fd: z must be >= 0");
    }
    require_spread(ep.gamma_r, "gamma_r");
    require_spread(ep.gamma_b, "gamma_b");
    if (z == 0.0) {
        return 0.0;
    }
    if (std::isinf(z)) {
        return 1.0;
    }
    // F_R + F_B (1 - F_R): equal to 1 - S_R S_B but free of cancellation when both are small.
    const double lz = std::log(z);
    const double f_r = 0.5 * erfc((ep.gamma_r.mu - lz) / (sqrt2 * ep.gamma_r.sigma));
    const double f_b = 0.5 * erfc((ep.gamma_b.mu - lz) / (sqrt2 * ep.gamma_b.sigma));
    return f_r + f_b * (0.5 * upper_erfc(ep.gamma_r, lz));
}

double survival_gamma_fd(const Endpoints& ep, double z) {
    if (std::isnan(z) || z < 0.0) {
        throw DomainError("survival_gamma_fd: z must be >= 0");
    }
    require_spread(ep.gamma_r, "gamma_r");
    require_spread(ep.gamma_b, "gamma_b");
    if (z == 0.0) {
        return 1.0;
    }
    if (std::isinf(z)) {
        return 0.0;
    }
    const double lz = std::log(z);
    return 0.25 * upper_erfc(ep.gamma_r, lz) * upper_erfc(ep.gamma_b, lz);
}

MetricResult avg_secrecy_rate(const Endpoints& ep, int order) {
    require_all(ep);
    const auto& rule = numerics::cached_laguerre_rule(order);
    const auto nodes = rule.nodes();
    const auto weights = rule.weights();
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double log_z = std::log(std::expm1(nodes[k]));
        const double eta_e = (ep.gamma_e.mu - log_z) / (sqrt2 * ep.gamma_e.sigma);
        const double eta_b = (log_z - ep.gamma_b.mu) / (sqrt2 * ep.gamma_b.sigma);
        const double eta_r = (log_z - ep.gamma_r.mu) / (sqrt2 * ep.gamma_r.sigma);
        const double product = erfc(eta_e) * erfc(eta_b) * erfc(eta_r);
        if (product != 0.0) {
            sum += weights[k] * std::exp(nodes[k]) / 8.0 * product;
        }
    }
    return MetricResult{sum / std::numbers::ln2, Method::quadrature, order, std::nullopt, {}};
}

double rate_integrand(const Endpoints& ep, double z, RateIntegrand form) {
    if (!(z > 0.0) || std::isinf(z)) {
        return 0.0;
    }
    double v = 0.0;
    if (form == RateIntegrand::cdf_form) {
        v = cdf(ep.gamma_e, z) * ln_survival(ep.gamma_r, z) * ln_survival(ep.gamma_b, z) / (1.0 + z);
    } else {
        const double lz = std::log(z);
        const double eta_e = (ep.gamma_e.mu - lz) / (sqrt2 * ep.gamma_e.sigma);
        const double eta_b = (-ep.gamma_b.mu + lz) / (sqrt2 * ep.gamma_b.sigma);
        const double eta_r = (-ep.gamma_r.mu + lz) / (sqrt2 * ep.gamma_r.sigma);
        v = erfc(eta_e) * erfc(eta_b) * erfc(eta_r) / (8.0 * (1.0 + z));
    }
    return v / std::numbers::ln2;
}

MetricResult avg_secrecy_rate_reference(const Endpoints& ep, double rel_tol, RateIntegrand form) {
    require_all(ep);
    std::vector<double> breaks;
    add_breakpoints(breaks, ep.gamma_e);
    add_breakpoints(breaks, ep.gamma_b);
    add_breakpoints(breaks, ep.gamma_r);
    const auto r = numerics::adaptive_integrate(
        [&](double z) { return rate_integrand(ep, z, form); }, 0.0, numerics::kInfinity, rel_tol, breaks);
    return MetricResult{r.value, Method::reference, std::nullopt, r.error_estimate, {}};
}

namespace {

// ln(2^rs (e^a + 1) - 1) for a = ln Gamma_E.
double log_upsilon(double rs_target, double a) {
    return log_add_exp(a + rs_target * std::numbers::ln2,
                       std::log(std::expm1(rs_target * std::numbers::ln2)));
}

void require_rate(double rs_target) {
    if (!(rs_target > 0.0) || !std::isfinite(rs_target)) {
        throw DomainError("rs_target must be positive and finite");
    }
}

} // namespace

MetricResult secrecy_outage(const Endpoints& ep, double rs_target, int order) {
    require_all(ep);
    require_rate(rs_target);
    const auto& rule = numerics::cached_hermite_rule(order);
    const auto nodes = rule.nodes();
    const auto weights = rule.weights();
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double lu = log_upsilon(rs_target, ep.gamma_e.mu + sqrt2 * ep.gamma_e.sigma * nodes[k]);
        sum += weights[k] * upper_erfc(ep.gamma_b, lu) * upper_erfc(ep.gamma_r, lu);
    }
    const double value = 1.0 - sum / (4.0 * std::sqrt(std::numbers::pi));
    return clamp_probability(MetricResult{value, Method::quadrature, order, std::nullopt, {}});
}

MetricResult secrecy_outage_reference(const Endpoints& ep, double rs_target, double rel_tol) {
    require_all(ep);
    require_rate(rs_target);
    std::vector<double> breaks;
    add_breakpoints(breaks, ep.gamma_e);
    const double gain = std::exp2(rs_target);
    for (const auto* rv : {&ep.gamma_b, &ep.gamma_r}) {
        for (int j = -4; j <= 4; j += 2) {
            const double z = (std::exp(rv->mu + j * rv->sigma) + 1.0) / gain - 1.0;
            if (std::isfinite(z) && z > 0.0) {
                breaks.push_back(z);
            }
        }
    }
    const auto r = numerics::adaptive_integrate(
        [&](double z) {
            const double density = pdf(ep.gamma_e, z);
            if (density == 0.0) {
                return 0.0;
            }
            return cdf_gamma_fd(ep, gain * (1.0 + z) - 1.0) * density;
        },
        0.0, numerics::kInfinity, rel_tol, breaks);
    return clamp_probability(MetricResult{r.value, Method::reference, std::nullopt, r.error_estimate, {}});
}

} // namespace secrelay
