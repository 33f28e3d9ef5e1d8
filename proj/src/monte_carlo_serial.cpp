#include "secrelay/monte_carlo.hpp"

#include "mc_kernels.hpp"

namespace secrelay::mc::serial {

McEstimate mc_avg_secrecy_rate(const SystemConfig& cfg, Mode mode, std::uint64_t n, std::uint64_t seed,
                               std::uint64_t stream) {
    detail::check_request(n, {});
    const detail::Sampler sampler(cfg, mode);
    detail::Moments total;
    for (std::uint64_t b = 0; b < detail::block_count(n); ++b) {
        total.merge(detail::rate_block(sampler, n, seed, stream, b));
    }
    return detail::rate_estimate(total, n, seed, mode);
}

std::vector<McEstimate> mc_secrecy_outage(const SystemConfig& cfg, std::span<const double> rs_targets,
                                          Mode mode, std::uint64_t n, std::uint64_t seed,
                                          std::uint64_t stream) {
    detail::check_request(n, rs_targets);
    const detail::Sampler sampler(cfg, mode);
    std::vector<std::uint64_t> counts(rs_targets.size(), 0);
    for (std::uint64_t b = 0; b < detail::block_count(n); ++b) {
        detail::outage_block(sampler, rs_targets, n, seed, stream, b, counts);
    }
    return detail::outage_estimates(counts, n, seed, mode);
}

} // namespace secrelay::mc::serial
