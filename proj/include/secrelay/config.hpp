#pragma once

#include "secrelay/channel.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace secrelay {

// A network plus the grids an experiment sweeps over. `system` carries the
// fixed parameters; its power, delta and n_eve fields are replaced per grid
// point.
struct ExperimentConfig {
    SystemConfig system;
    std::vector<double> power_grid_dbm{40.0};
    std::vector<double> delta_grid_db{-80.0};
    std::vector<int> n_eve_grid{2};
    std::vector<double> rs_grid{2.0};
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;

    // System for one grid point (equal power split: P_A = P_R = power).
    SystemConfig at(double power_dbm, double delta_db, int n_eve) const;
};

// Defaults: d_ab 30 m, relay at the midpoint, nu = 4, m = 2, 10 dB shadowing,
// P = 40 dBm, delta = -80 dB, N_E = 2, Eve LN(0.21, 0.76) per antenna and
// source, K = 24, R_s = 2.
ExperimentConfig sanity_preset();

// Rate figure: P in 0:100:5 dBm, delta in {-70,-75,-80,-85,-90}, N_E in {2,4,8}.
ExperimentConfig rate_vs_power_preset();
// Outage figure: same powers, delta in {-70,-80,-90}, N_E = 2, R_s in {2,4}.
ExperimentConfig outage_vs_power_preset();

// key=value text, one key per line, '#' starts a comment. Unset keys keep
// the sanity_preset() value. Throws ParseError naming the key and line.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

// Inclusive "start:stop:step" or a single number.
std::vector<double> parse_range(const std::string& text);

} // namespace secrelay
