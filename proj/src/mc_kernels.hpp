#pragma once

// Per-block sampling kernels shared by the OpenMP and serial drivers.

#include "secrelay/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace secrelay::mc::detail {

// Running mean / M2 of one block; merged in block order (Chan et al.).
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.count == 0.0) {
            return;
        }
        const double total = count + o.count;
        const double d = o.mean - mean;
        mean += d * o.count / total;
        m2 += o.m2 + d * d * count * o.count / total;
        count = total;
    }
};

// Instantaneous legitimate and eavesdropper SNRs of one network realization.
struct Draw {
    double legit; // min(Gamma_R, Gamma_B)
    double eve;   // Gamma_E
};

// Everything a block needs to draw realizations, resolved once per call.
class Sampler {
public:
    Sampler(const SystemConfig& cfg, Mode mode) : mode_(mode), n_eve_(cfg.n_eve) {
        validate(cfg);
        if (mode == Mode::ln_fit) {
            endpoints_ = endpoints_for(cfg);
        } else {
            ar_ = composite_link(cfg, Link::ar);
            ab_ = composite_link(cfg, Link::ab);
            rb_ = composite_link(cfg, Link::rb);
            rr_ = composite_link(cfg, Link::rr);
            if (const auto* d = std::get_if<EveDirect>(&cfg.eve)) {
                eve_direct_ = *d;
            } else {
                ae_ = composite_link(cfg, Link::ae);
                re_ = composite_link(cfg, Link::re);
            }
        }
    }

    template <typename Urbg>
    Draw draw(Urbg& rng, std::normal_distribution<double>& normal) const {
        if (mode_ == Mode::ln_fit) {
            const double r = std::exp(endpoints_.gamma_r.mu + endpoints_.gamma_r.sigma * normal(rng));
            const double b = std::exp(endpoints_.gamma_b.mu + endpoints_.gamma_b.sigma * normal(rng));
            const double e = std::exp(endpoints_.gamma_e.mu + endpoints_.gamma_e.sigma * normal(rng));
            return Draw{std::min(r, b), e};
        }
        const double ar = sample_composite_snr(ar_, rng);
        const double rr = sample_composite_snr(rr_, rng);
        const double ab = sample_composite_snr(ab_, rng);
        const double rb = sample_composite_snr(rb_, rng);
        double eve = 0.0;
        for (int k = 0; k < n_eve_; ++k) {
            if (eve_direct_) {
                eve += std::exp(eve_direct_->mu + eve_direct_->sigma * normal(rng));
                eve += std::exp(eve_direct_->mu + eve_direct_->sigma * normal(rng));
            } else {
                eve += sample_composite_snr(ae_, rng);
                eve += sample_composite_snr(re_, rng);
            }
        }
        return Draw{std::min(ar / rr, ab + rb), eve};
    }

private:
    Mode mode_;
    int n_eve_;
    Endpoints endpoints_{};
    CompositeLinkSpec ar_{}, ab_{}, rb_{}, rr_{}, ae_{}, re_{};
    std::optional<EveDirect> eve_direct_;
};

// log2(1 + legit) - log2(1 + eve), unclipped.
inline double rate_gap(const Draw& d) {
    return (std::log1p(d.legit) - std::log1p(d.eve)) / std::numbers::ln2;
}

inline std::uint64_t block_count(std::uint64_t n) { return (n + kBlockSize - 1) / kBlockSize; }

inline std::uint64_t block_length(std::uint64_t n, std::uint64_t block) {
    return std::min(kBlockSize, n - block * kBlockSize);
}

inline Moments rate_block(const Sampler& sampler, std::uint64_t n, std::uint64_t seed,
                          std::uint64_t stream, std::uint64_t block) {
    auto rng = block_engine(seed, stream, block);
    std::normal_distribution<double> normal;
    Moments m;
    const auto len = block_length(n, block);
    for (std::uint64_t i = 0; i < len; ++i) {
        m.add(std::max(rate_gap(sampler.draw(rng, normal)), 0.0));
    }
    return m;
}

// counts[j] += number of samples with gap < rs_targets[j].
inline void outage_block(const Sampler& sampler, std::span<const double> rs_targets, std::uint64_t n,
                         std::uint64_t seed, std::uint64_t stream, std::uint64_t block,
                         std::span<std::uint64_t> counts) {
    auto rng = block_engine(seed, stream, block);
    std::normal_distribution<double> normal;
    const auto len = block_length(n, block);
    for (std::uint64_t i = 0; i < len; ++i) {
        const double gap = rate_gap(sampler.draw(rng, normal));
        for (std::size_t j = 0; j < rs_targets.size(); ++j) {
            counts[j] += gap < rs_targets[j] ? 1 : 0;
        }
    }
}

inline void check_request(std::uint64_t n, std::span<const double> rs_targets) {
    if (n < kMinSamples) {
        throw ConfigError("Monte-Carlo needs at least " + std::to_string(kMinSamples) + " samples");
    }
    for (double rs : rs_targets) {
        if (!(rs > 0.0) || !std::isfinite(rs)) {
            throw DomainError("rs_target must be positive and finite");
        }
    }
}

inline McEstimate rate_estimate(const Moments& m, std::uint64_t n, std::uint64_t seed, Mode mode) {
    const double var = m.count > 1.0 ? m.m2 / (m.count - 1.0) : 0.0;
    return McEstimate{m.mean, std::sqrt(var / m.count), n, seed, mode};
}

inline std::vector<McEstimate> outage_estimates(std::span<const std::uint64_t> counts, std::uint64_t n,
                                                std::uint64_t seed, Mode mode) {
    std::vector<McEstimate> out;
    out.reserve(counts.size());
    for (auto c : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(n);
        out.push_back(McEstimate{p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n, seed, mode});
    }
    return out;
}

} // namespace secrelay::mc::detail
