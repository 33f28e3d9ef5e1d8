#pragma once

#include "secrelay/lognormal.hpp"

#include <array>
#include <optional>
#include <variant>

namespace secrelay {

// Eavesdropper per-antenna, per-source SNR given directly in nats.
struct EveDirect {
    double mu = 0.21;
    double sigma = 0.76;
};

// Eavesdropper per-antenna, per-source SNR as a composite link; the mean is
// taken as-is (no geometry), shared by the A->E and R->E branches.
struct EveComposite {
    double mean_snr_db = -10.0;
    double shadow_sd_db = 5.0;
};

using EveSpec = std::variant<EveDirect, EveComposite>;

enum class Link { ar, ab, rb, rr, ae, re };

struct LinkOverride {
    std::optional<double> nakagami_m;
    std::optional<double> shadow_sd_db;
};

// Network description. Noise has unit variance, so a link's mean SNR in dB is
// the transmit power in dBm plus the link gain in dB.
struct SystemConfig {
    double d_ab_m = 30.0;
    double relay_fraction = 0.5;
    double path_loss_exponent = 4.0;
    double nakagami_m = 2.0;
    double shadow_sd_db = 10.0;
    double power_a_dbm = 40.0;
    double power_r_dbm = 40.0;
    double delta_db = -80.0;
    int n_eve = 2;
    EveSpec eve = EveDirect{};
    int quadrature_order = 24;
    std::array<LinkOverride, 6> overrides{};

    LinkOverride& override_for(Link link) { return overrides[static_cast<std::size_t>(link)]; }
    const LinkOverride& override_for(Link link) const {
        return overrides[static_cast<std::size_t>(link)];
    }
};

// Throws ConfigError on any violated invariant.
void validate(const SystemConfig& cfg);

// Deterministic gains of the legitimate links, in dB.
double path_gain_db(double distance_m, double path_loss_exponent);

// Composite parameters of one physical link (before the LN fit).
CompositeLinkSpec composite_link(const SystemConfig& cfg, Link link);

struct LinkSet {
    LogNormalRV gamma_ar;
    LogNormalRV gamma_ab;
    LogNormalRV gamma_rb;
    LogNormalRV gamma_rr;
    LogNormalRV gamma_ae; // per antenna
    LogNormalRV gamma_re; // per antenna
};

struct Endpoints {
    LogNormalRV gamma_r; // relay SINR
    LogNormalRV gamma_b; // Bob, direct + relayed
    LogNormalRV gamma_e; // Eve after MRC over n_eve antennas, both sources
};

LinkSet build_links(const SystemConfig& cfg);
Endpoints endpoint_distributions(const LinkSet& links, int n_eve);

inline Endpoints endpoints_for(const SystemConfig& cfg) {
    return endpoint_distributions(build_links(cfg), cfg.n_eve);
}

} // namespace secrelay
