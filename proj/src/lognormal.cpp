#include "secrelay/lognormal.hpp"

#include "secrelay/error.hpp"
#include "secrelay/numerics.hpp"

#include <cmath>
#include <string>

namespace secrelay {

void validate(const LogNormalRV& rv) {
    if (!std::isfinite(rv.mu)) {
        throw DomainError("log-normal mu must be finite");
    }
    if (!(rv.sigma >= 0.0) || !std::isfinite(rv.sigma)) {
        throw DomainError("log-normal sigma must be finite and >= 0");
    }
}

void validate(const CompositeLinkSpec& spec) {
    if (!(spec.m >= 0.5) || !std::isfinite(spec.m)) {
        throw DomainError("Nakagami m must be >= 0.5, got " + std::to_string(spec.m));
    }
    if (!std::isfinite(spec.mean_snr_db)) {
        throw DomainError("mean SNR must be finite");
    }
    if (!(spec.shadow_sd_db >= 0.0) || !std::isfinite(spec.shadow_sd_db)) {
        throw DomainError("shadowing sd must be finite and >= 0");
    }
}

LogNormalRV ln_from_composite(const CompositeLinkSpec& spec) {
    validate(spec);
    const double shadow = kXi * spec.shadow_sd_db;
    return LogNormalRV{
        numerics::digamma(spec.m) - std::log(spec.m) + kXi * spec.mean_snr_db,
        std::sqrt(numerics::trigamma(spec.m) + shadow * shadow),
    };
}

CumulantPair raw_cumulants(const LogNormalRV& rv) {
    validate(rv);
    const double s2 = rv.sigma * rv.sigma;
    const double k1 = std::exp(rv.mu + 0.5 * s2);
    const double k2 = std::expm1(s2) * std::exp(2.0 * rv.mu + s2);
    if (!std::isfinite(k1) || !std::isfinite(k2) || k1 == 0.0) {
        throw RangeError("log-normal cumulants not representable (mu=" + std::to_string(rv.mu) +
                         ", sigma=" + std::to_string(rv.sigma) + ")");
    }
    return CumulantPair{k1, k2};
}

LogNormalRV ln_from_cumulants(const CumulantPair& c) {
    if (!(c.k1 > 0.0) || !std::isfinite(c.k1)) {
        throw DomainError("first cumulant must be positive and finite");
    }
    if (!(c.k2 >= 0.0) || !std::isfinite(c.k2)) {
        throw DomainError("second cumulant must be non-negative and finite");
    }
    // sigma^2 = ln(1 + k2/k1^2), mu = ln k1 - sigma^2/2; same as the
    // ln(k1^2) - ln sqrt(k1^2 + k2) form without squaring k1.
    const double ratio = c.k2 / c.k1 / c.k1;
    const double s2 = std::log1p(ratio);
    return LogNormalRV{std::log(c.k1) - 0.5 * s2, std::sqrt(s2)};
}

LogNormalRV scale_db(const LogNormalRV& rv, double gain_db) {
    validate(rv);
    if (!std::isfinite(gain_db)) {
        throw DomainError("gain must be finite");
    }
    return LogNormalRV{rv.mu + kXi * gain_db, rv.sigma};
}

LogNormalRV ratio(const LogNormalRV& num, const LogNormalRV& den) {
    validate(num);
    validate(den);
    return LogNormalRV{num.mu - den.mu, std::hypot(num.sigma, den.sigma)};
}

LogNormalRV sum_fw(std::span<const LogNormalRV> terms) {
    if (terms.empty()) {
        throw DomainError("sum_fw: empty term list");
    }
    if (terms.size() == 1) {
        validate(terms[0]);
        return terms[0];
    }
    CumulantPair total{0.0, 0.0};
    for (const auto& t : terms) {
        const auto c = raw_cumulants(t);
        total.k1 += c.k1;
        total.k2 += c.k2;
    }
    return ln_from_cumulants(total);
}

LogNormalRV n_fold(const LogNormalRV& rv, int n) {
    if (n < 1) {
        throw DomainError("n_fold: n must be >= 1");
    }
    if (n == 1) {
        validate(rv);
        return rv;
    }
    const auto c = raw_cumulants(rv);
    return ln_from_cumulants(CumulantPair{n * c.k1, n * c.k2});
}

double cdf(const LogNormalRV& rv, double z) {
    validate(rv);
    if (std::isnan(z)) {
        throw DomainError("cdf: NaN argument");
    }
    if (z <= 0.0) {
        return 0.0;
    }
    if (std::isinf(z)) {
        return 1.0;
    }
    const double lz = std::log(z);
    if (rv.sigma == 0.0) {
        return lz >= rv.mu ? 1.0 : 0.0;
    }
    return 0.5 * numerics::erfc((rv.mu - lz) / (std::numbers::sqrt2 * rv.sigma));
}

double pdf(const LogNormalRV& rv, double z) {
    validate(rv);
    if (rv.sigma == 0.0) {
        throw DomainError("pdf: degenerate log-normal has no density");
    }
    if (!(z > 0.0) || std::isinf(z)) {
        return 0.0;
    }
    const double u = (std::log(z) - rv.mu) / rv.sigma;
    return std::exp(-0.5 * u * u) / (z * rv.sigma * std::sqrt(2.0 * std::numbers::pi));
}

} // namespace secrelay
