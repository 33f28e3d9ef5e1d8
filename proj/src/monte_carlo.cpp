#include "secrelay/monte_carlo.hpp"

#include "mc_kernels.hpp"

#include <cstdint>
#include <vector>

namespace secrelay::mc {

Engine block_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t block) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),   static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
        static_cast<std::uint32_t>(block),  static_cast<std::uint32_t>(block >> 32),
    };
    return Engine(seq);
}

McEstimate mc_avg_secrecy_rate(const SystemConfig& cfg, Mode mode, std::uint64_t n, std::uint64_t seed,
                               std::uint64_t stream) {
    detail::check_request(n, {});
    const detail::Sampler sampler(cfg, mode);
    const auto blocks = static_cast<std::int64_t>(detail::block_count(n));
    std::vector<detail::Moments> partial(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < blocks; ++b) {
        partial[static_cast<std::size_t>(b)] =
            detail::rate_block(sampler, n, seed, stream, static_cast<std::uint64_t>(b));
    }

    detail::Moments total;
    for (const auto& m : partial) {
        total.merge(m);
    }
    return detail::rate_estimate(total, n, seed, mode);
}

std::vector<McEstimate> mc_secrecy_outage(const SystemConfig& cfg, std::span<const double> rs_targets,
                                          Mode mode, std::uint64_t n, std::uint64_t seed,
                                          std::uint64_t stream) {
    detail::check_request(n, rs_targets);
    const detail::Sampler sampler(cfg, mode);
    const auto blocks = static_cast<std::int64_t>(detail::block_count(n));
    const std::size_t width = rs_targets.size();
    std::vector<std::uint64_t> per_block(static_cast<std::size_t>(blocks) * width, 0);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const auto offset = static_cast<std::size_t>(b) * width;
        detail::outage_block(sampler, rs_targets, n, seed, stream, static_cast<std::uint64_t>(b),
                             std::span(per_block).subspan(offset, width));
    }

    // Integer counts: the reduction order cannot change the result.
    std::vector<std::uint64_t> counts(width, 0);
    for (std::size_t i = 0; i < per_block.size(); ++i) {
        counts[i % width] += per_block[i];
    }
    return detail::outage_estimates(counts, n, seed, mode);
}

McEstimate mc_secrecy_outage(const SystemConfig& cfg, double rs_target, Mode mode, std::uint64_t n,
                             std::uint64_t seed, std::uint64_t stream) {
    const double targets[] = {rs_target};
    return mc_secrecy_outage(cfg, targets, mode, n, seed, stream).front();
}

} // namespace secrelay::mc
