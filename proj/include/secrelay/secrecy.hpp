#pragma once

#include "secrelay/channel.hpp"

#include <optional>
#include <string>

namespace secrelay {

enum class Method { quadrature, reference };

struct MetricResult {
    double value = 0.0;
    Method method = Method::quadrature;
    std::optional<int> quadrature_order;
    std::optional<double> error_estimate;
    // Non-empty when the value was adjusted, e.g. clamped into [0, 1].
    std::string note;
};

inline constexpr int kDefaultQuadratureOrder = 24;

// CDF of min(Gamma_R, Gamma_B) for independent log-normals.
double cdf_gamma_fd(const Endpoints& ep, double z);

// 1 - cdf_gamma_fd, computed without cancellation.
double survival_gamma_fd(const Endpoints& ep, double z);

// Average secrecy rate (bits/s/Hz), K-point Gauss-Laguerre rule after
// z = e^t - 1.
MetricResult avg_secrecy_rate(const Endpoints& ep, int order = kDefaultQuadratureOrder);

enum class RateIntegrand {
    cdf_form,  // F_E(z) [1 - F_FD(z)] / (1 + z), with 1 - F_FD = S_R S_B from the component CDFs
    erfc_form, // erfc(eta_E) erfc(eta_B) erfc(eta_R) / (8 (1 + z))
};

// The rate integrand in z (already divided by ln 2).
double rate_integrand(const Endpoints& ep, double z, RateIntegrand form);

MetricResult avg_secrecy_rate_reference(const Endpoints& ep, double rel_tol = 1e-9,
                                        RateIntegrand form = RateIntegrand::cdf_form);

// Pr[secrecy rate < rs_target], K-point Gauss-Hermite rule over ln Gamma_E.
MetricResult secrecy_outage(const Endpoints& ep, double rs_target,
                            int order = kDefaultQuadratureOrder);

MetricResult secrecy_outage_reference(const Endpoints& ep, double rs_target, double rel_tol = 1e-10);

} // namespace secrelay
