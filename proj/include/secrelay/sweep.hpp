#pragma once

#include "secrelay/config.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace secrelay {

enum class Metric { rate, outage };

enum class SweepMethod { analytic, reference, mc_ln, mc_composite };

std::string_view to_string(Metric m);
std::string_view to_string(SweepMethod m);
SweepMethod parse_method(std::string_view name);

struct SweepSpec {
    ExperimentConfig config;
    std::vector<Metric> metrics{Metric::rate};
    std::vector<SweepMethod> methods{SweepMethod::analytic};
};

inline constexpr std::size_t kMaxSweepPoints = 100'000;

inline constexpr std::string_view kCsvHeader =
    "power_dbm,delta_db,n_eve,rs_target,metric,method,value,std_error,n_samples,seed,status";

void validate(const SweepSpec& spec);

// CSV text, rows sorted by (power, delta, n_eve, rs_target, metric, method).
// threads <= 0 uses the OpenMP default. Output is independent of threads.
std::string render_sweep(const SweepSpec& spec, int threads = 0);

// Writes render_sweep() to out_path; IoError if the file cannot be written.
void run_sweep(const SweepSpec& spec, const std::filesystem::path& out_path, int threads = 0);

// Shortest round-trip decimal form of x.
std::string format_double(double x);

} // namespace secrelay
