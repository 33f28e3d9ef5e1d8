#include "secrelay/channel.hpp"

#include "secrelay/error.hpp"

#include <cmath>
#include <string>

namespace secrelay {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw ConfigError(what);
    }
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

void validate(const SystemConfig& cfg) {
    require(finite(cfg.d_ab_m) && cfg.d_ab_m > 0.0, "d_ab_m must be positive");
    require(cfg.relay_fraction > 0.0 && cfg.relay_fraction < 1.0, "relay_fraction must lie in (0, 1)");
    require(finite(cfg.path_loss_exponent) && cfg.path_loss_exponent > 0.0,
            "path_loss_exponent must be positive");
    require(finite(cfg.nakagami_m) && cfg.nakagami_m >= 0.5, "nakagami_m must be >= 0.5");
    require(finite(cfg.shadow_sd_db) && cfg.shadow_sd_db >= 0.0, "shadow_sd_db must be >= 0");
    require(finite(cfg.power_a_dbm) && finite(cfg.power_r_dbm), "powers must be finite");
    require(finite(cfg.delta_db) && cfg.delta_db <= 0.0, "delta_db must be <= 0");
    require(cfg.n_eve >= 1, "n_eve must be >= 1");
    require(cfg.quadrature_order >= 1, "quadrature_order must be >= 1");
    if (const auto* d = std::get_if<EveDirect>(&cfg.eve)) {
        require(finite(d->mu), "eve_mu must be finite");
        require(finite(d->sigma) && d->sigma >= 0.0, "eve_sigma must be >= 0");
    } else {
        const auto& c = std::get<EveComposite>(cfg.eve);
        require(finite(c.mean_snr_db), "eve_mean_snr_db must be finite");
        require(finite(c.shadow_sd_db) && c.shadow_sd_db >= 0.0, "eve_shadow_sd_db must be >= 0");
    }
    for (const auto& o : cfg.overrides) {
        require(!o.nakagami_m || (finite(*o.nakagami_m) && *o.nakagami_m >= 0.5),
                "per-link nakagami_m must be >= 0.5");
        require(!o.shadow_sd_db || (finite(*o.shadow_sd_db) && *o.shadow_sd_db >= 0.0),
                "per-link shadow_sd_db must be >= 0");
    }
}

double path_gain_db(double distance_m, double path_loss_exponent) {
    if (!(distance_m > 0.0)) {
        throw ConfigError("link distance must be positive");
    }
    return -10.0 * path_loss_exponent * std::log10(distance_m);
}

CompositeLinkSpec composite_link(const SystemConfig& cfg, Link link) {
    const auto& o = cfg.override_for(link);
    CompositeLinkSpec spec{o.nakagami_m.value_or(cfg.nakagami_m), 0.0,
                           o.shadow_sd_db.value_or(cfg.shadow_sd_db)};
    const double d_ar = cfg.relay_fraction * cfg.d_ab_m;
    const double d_rb = (1.0 - cfg.relay_fraction) * cfg.d_ab_m;
    const double nu = cfg.path_loss_exponent;
    switch (link) {
    case Link::ar:
        spec.mean_snr_db = cfg.power_a_dbm + path_gain_db(d_ar, nu);
        break;
    case Link::ab:
        spec.mean_snr_db = cfg.power_a_dbm + path_gain_db(cfg.d_ab_m, nu);
        break;
    case Link::rb:
        spec.mean_snr_db = cfg.power_r_dbm + path_gain_db(d_rb, nu);
        break;
    case Link::rr:
        spec.mean_snr_db = cfg.power_r_dbm + cfg.delta_db;
        break;
    case Link::ae:
    case Link::re: {
        const auto* eve = std::get_if<EveComposite>(&cfg.eve);
        if (eve == nullptr) {
            throw ConfigError("eavesdropper links are given directly, not as composite links");
        }
        spec.mean_snr_db = eve->mean_snr_db;
        spec.shadow_sd_db = o.shadow_sd_db.value_or(eve->shadow_sd_db);
        break;
    }
    }
    return spec;
}

LinkSet build_links(const SystemConfig& cfg) {
    validate(cfg);
    LinkSet links{};
    links.gamma_ar = ln_from_composite(composite_link(cfg, Link::ar));
    links.gamma_ab = ln_from_composite(composite_link(cfg, Link::ab));
    links.gamma_rb = ln_from_composite(composite_link(cfg, Link::rb));
    links.gamma_rr = ln_from_composite(composite_link(cfg, Link::rr));
    if (const auto* d = std::get_if<EveDirect>(&cfg.eve)) {
        links.gamma_ae = LogNormalRV{d->mu, d->sigma};
        links.gamma_re = LogNormalRV{d->mu, d->sigma};
    } else {
        links.gamma_ae = ln_from_composite(composite_link(cfg, Link::ae));
        links.gamma_re = ln_from_composite(composite_link(cfg, Link::re));
    }
    return links;
}

Endpoints endpoint_distributions(const LinkSet& links, int n_eve) {
    if (n_eve < 1) {
        throw ConfigError("n_eve must be >= 1");
    }
    const LogNormalRV bob_terms[] = {links.gamma_ab, links.gamma_rb};
    const auto ae = raw_cumulants(links.gamma_ae);
    const auto re = raw_cumulants(links.gamma_re);
    const CumulantPair eve{n_eve * (ae.k1 + re.k1), n_eve * (ae.k2 + re.k2)};
    return Endpoints{
        ratio(links.gamma_ar, links.gamma_rr),
        sum_fw(bob_terms),
        ln_from_cumulants(eve),
    };
}

} // namespace secrelay
