#pragma once

#include "secrelay/channel.hpp"
#include "secrelay/error.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace secrelay::mc {

enum class Mode {
    ln_fit,    // sample the fitted endpoint log-normals
    composite, // sample every physical Gamma x LN link, MRC by summation
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    Mode mode = Mode::ln_fit;
};

inline constexpr std::uint64_t kMinSamples = 1000;
// Samples per RNG block. Every block owns an engine keyed by
// (seed, stream, block index); the block partition is fixed, so results do
// not depend on the thread count.
inline constexpr std::uint64_t kBlockSize = 8192;

using Engine = std::mt19937_64;

Engine block_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t block);

// One draw of a Gamma(m, 1/m) x LN(dB mean, dB sd) squared envelope.
template <typename Urbg>
double sample_composite_snr(const CompositeLinkSpec& spec, Urbg& rng) {
    std::gamma_distribution<double> fading(spec.m, 1.0 / spec.m);
    std::normal_distribution<double> unit;
    for (;;) {
        const double g = fading(rng);
        const double db = spec.shadow_sd_db > 0.0 ? spec.mean_snr_db + spec.shadow_sd_db * unit(rng)
                                                  : spec.mean_snr_db;
        const double s = std::exp(kXi * db);
        const double v = g * s;
        if (v > 0.0 && std::isfinite(v)) {
            return v;
        }
    }
}

// Parallel (OpenMP) estimators. `stream` separates independent sweep points.
McEstimate mc_avg_secrecy_rate(const SystemConfig& cfg, Mode mode, std::uint64_t n,
                               std::uint64_t seed, std::uint64_t stream = 0);

McEstimate mc_secrecy_outage(const SystemConfig& cfg, double rs_target, Mode mode, std::uint64_t n,
                             std::uint64_t seed, std::uint64_t stream = 0);

// Outage for several targets on one shared sample set (common random numbers).
std::vector<McEstimate> mc_secrecy_outage(const SystemConfig& cfg, std::span<const double> rs_targets,
                                          Mode mode, std::uint64_t n, std::uint64_t seed,
                                          std::uint64_t stream = 0);

// Single-threaded reference drivers; bit-identical to the parallel ones.
namespace serial {

McEstimate mc_avg_secrecy_rate(const SystemConfig& cfg, Mode mode, std::uint64_t n,
                               std::uint64_t seed, std::uint64_t stream = 0);

std::vector<McEstimate> mc_secrecy_outage(const SystemConfig& cfg, std::span<const double> rs_targets,
                                          Mode mode, std::uint64_t n, std::uint64_t seed,
                                          std::uint64_t stream = 0);

} // namespace serial

} // namespace secrelay::mc
