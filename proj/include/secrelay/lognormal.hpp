#pragma once

#include <numbers>
#include <span>

namespace secrelay {

// dB -> nepers scale for power quantities: ln(10)/10.
inline constexpr double kXi = std::numbers::ln10 / 10.0;

// Log-normal SNR distribution: ln X ~ N(mu, sigma^2), natural-log units.
// sigma == 0 is a point mass at e^mu.
struct LogNormalRV {
    double mu = 0.0;
    double sigma = 0.0;
};

// First two cumulants (mean, variance) of a linear-scale SNR.
struct CumulantPair {
    double k1 = 1.0;
    double k2 = 0.0;
};

// Nakagami-m fading (squared envelope Gamma(m, 1/m)) times log-normal
// shadowing with the given dB mean and dB standard deviation.
struct CompositeLinkSpec {
    double m = 1.0;
    double mean_snr_db = 0.0;
    double shadow_sd_db = 0.0;
};

void validate(const LogNormalRV& rv);
void validate(const CompositeLinkSpec& spec);

// Exact log-moment match of Gamma x LN onto a single LN:
//   mu = psi(m) - ln m + xi * mean_db,  sigma^2 = psi'(m) + (xi * sd_db)^2.
LogNormalRV ln_from_composite(const CompositeLinkSpec& spec);

CumulantPair raw_cumulants(const LogNormalRV& rv);
LogNormalRV ln_from_cumulants(const CumulantPair& c);

LogNormalRV scale_db(const LogNormalRV& rv, double gain_db);

// Distribution of num/den for independent log-normals (exact).
LogNormalRV ratio(const LogNormalRV& num, const LogNormalRV& den);

// Cumulant-matched single-LN fit of a sum of independent log-normals.
LogNormalRV sum_fw(std::span<const LogNormalRV> terms);

// Fit for the sum of n i.i.d. copies (MRC over n branches).
LogNormalRV n_fold(const LogNormalRV& rv, int n);

double cdf(const LogNormalRV& rv, double z);
double pdf(const LogNormalRV& rv, double z);

} // namespace secrelay
