#include "secrelay/sweep.hpp"

#include "secrelay/error.hpp"
#include "secrelay/monte_carlo.hpp"
#include "secrelay/secrecy.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace secrelay {

std::string_view to_string(Metric m) { return m == Metric::rate ? "rate" : "outage"; }

std::string_view to_string(SweepMethod m) {
    switch (m) {
    case SweepMethod::analytic:
        return "analytic";
    case SweepMethod::reference:
        return "reference";
    case SweepMethod::mc_ln:
        return "mc-ln";
    case SweepMethod::mc_composite:
        return "mc-composite";
    }
    return "?";
}

SweepMethod parse_method(std::string_view name) {
    for (auto m : {SweepMethod::analytic, SweepMethod::reference, SweepMethod::mc_ln, SweepMethod::mc_composite}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw ConfigError("unknown method '" + std::string(name) +
                      "' (expected analytic, reference, mc-ln or mc-composite)");
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

void validate(const SweepSpec& spec) {
    const auto& c = spec.config;
    if (c.power_grid_dbm.empty() || c.delta_grid_db.empty() || c.n_eve_grid.empty() || spec.metrics.empty() ||
        spec.methods.empty()) {
        throw ConfigError("sweep grids, metrics and methods must be non-empty");
    }
    const bool outage = std::find(spec.metrics.begin(), spec.metrics.end(), Metric::outage) != spec.metrics.end();
    if (outage && c.rs_grid.empty()) {
        throw ConfigError("outage sweep needs at least one rs_target");
    }
    const std::size_t rs_count = outage ? c.rs_grid.size() : 1;
    const double points = static_cast<double>(c.power_grid_dbm.size()) * c.delta_grid_db.size() *
                          c.n_eve_grid.size() * rs_count;
    if (points > static_cast<double>(kMaxSweepPoints)) {
        throw ConfigError("sweep has more than 100000 grid points");
    }
    const bool needs_mc = std::any_of(spec.methods.begin(), spec.methods.end(), [](SweepMethod m) {
        return m == SweepMethod::mc_ln || m == SweepMethod::mc_composite;
    });
    if (needs_mc && c.samples < mc::kMinSamples) {
        throw ConfigError("Monte-Carlo methods need samples >= 1000");
    }
    for (double rs : c.rs_grid) {
        if (!(rs > 0.0)) {
            throw ConfigError("rs_target values must be positive");
        }
    }
    for (double p : c.power_grid_dbm) {
        for (double d : c.delta_grid_db) {
            for (int n : c.n_eve_grid) {
                secrelay::validate(c.at(p, d, n));
            }
        }
    }
}

namespace {

struct Row {
    double power;
    double delta;
    int n_eve;
    std::optional<double> rs;
    Metric metric;
    SweepMethod method;
    std::string value;
    std::string std_error;
    std::string n_samples;
    std::string seed;
    std::string status;

    auto key() const {
        return std::tuple(power, delta, n_eve, rs.has_value(), rs.value_or(0.0), to_string(metric),
                          to_string(method));
    }
};

std::string sanitize(std::string text) {
    std::replace(text.begin(), text.end(), ',', ';');
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

Row make_row(double power, double delta, int n_eve, std::optional<double> rs, Metric metric, SweepMethod method) {
    return Row{power, delta, n_eve, rs, metric, method, {}, {}, {}, {}, "ok"};
}

void fill(Row& row, const MetricResult& r) {
    row.value = format_double(r.value);
    if (!r.note.empty()) {
        row.status = "ok: " + sanitize(r.note);
    }
}

void fill(Row& row, const mc::McEstimate& e) {
    row.value = format_double(e.mean);
    row.std_error = format_double(e.std_error);
    row.n_samples = std::to_string(e.n_samples);
    row.seed = std::to_string(e.seed);
}

template <typename F>
void guarded(Row& row, F&& compute) {
    try {
        compute();
    } catch (const std::exception& e) {
        row.value.clear();
        row.std_error.clear();
        row.n_samples.clear();
        row.seed.clear();
        row.status = "error: " + sanitize(e.what());
    }
}

// All rows of one (power, delta, n_eve) point. `stream` keys the MC engines.
std::vector<Row> evaluate_point(const SweepSpec& spec, double power, double delta, int n_eve, std::uint64_t stream) {
    const auto& c = spec.config;
    const SystemConfig sys = c.at(power, delta, n_eve);
    std::optional<Endpoints> ep;
    std::string endpoint_error;
    try {
        ep = endpoints_for(sys);
    } catch (const std::exception& e) {
        endpoint_error = e.what();
    }
    auto need_endpoints = [&]() -> const Endpoints& {
        if (!ep) {
            throw RangeError(endpoint_error);
        }
        return *ep;
    };

    std::vector<Row> rows;
    for (Metric metric : spec.metrics) {
        for (SweepMethod method : spec.methods) {
            if (metric == Metric::rate) {
                Row row = make_row(power, delta, n_eve, std::nullopt, metric, method);
                guarded(row, [&] {
                    switch (method) {
                    case SweepMethod::analytic:
                        fill(row, avg_secrecy_rate(need_endpoints(), sys.quadrature_order));
                        break;
                    case SweepMethod::reference:
                        fill(row, avg_secrecy_rate_reference(need_endpoints()));
                        break;
                    case SweepMethod::mc_ln:
                    case SweepMethod::mc_composite: {
                        const auto mode = method == SweepMethod::mc_ln ? mc::Mode::ln_fit : mc::Mode::composite;
                        fill(row, mc::mc_avg_secrecy_rate(sys, mode, c.samples, c.seed, stream));
                        break;
                    }
                    }
                });
                rows.push_back(std::move(row));
                continue;
            }
            if (method == SweepMethod::mc_ln || method == SweepMethod::mc_composite) {
                const auto mode = method == SweepMethod::mc_ln ? mc::Mode::ln_fit : mc::Mode::composite;
                std::vector<Row> batch;
                for (double rs : c.rs_grid) {
                    batch.push_back(make_row(power, delta, n_eve, rs, metric, method));
                }
                try {
                    const auto est = mc::mc_secrecy_outage(sys, c.rs_grid, mode, c.samples, c.seed, stream);
                    for (std::size_t i = 0; i < batch.size(); ++i) {
                        fill(batch[i], est[i]);
                    }
                } catch (const std::exception& e) {
                    for (auto& row : batch) {
                        row.status = "error: " + sanitize(e.what());
                    }
                }
                rows.insert(rows.end(), batch.begin(), batch.end());
                continue;
            }
            for (double rs : c.rs_grid) {
                Row row = make_row(power, delta, n_eve, rs, metric, method);
                guarded(row, [&] {
                    if (method == SweepMethod::analytic) {
                        fill(row, secrecy_outage(need_endpoints(), rs, sys.quadrature_order));
                    } else {
                        fill(row, secrecy_outage_reference(need_endpoints(), rs));
                    }
                });
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

int effective_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::string render_sweep(const SweepSpec& spec_in, int threads) {
    validate(spec_in);
    SweepSpec spec = spec_in;
    spec.metrics = sorted_unique(spec.metrics);
    spec.methods = sorted_unique(spec.methods);
    spec.config.rs_grid = sorted_unique(spec.config.rs_grid);
    const auto powers = sorted_unique(spec.config.power_grid_dbm);
    const auto deltas = sorted_unique(spec.config.delta_grid_db);
    const auto n_eves = sorted_unique(spec.config.n_eve_grid);

    const std::size_t points = powers.size() * deltas.size() * n_eves.size();
    std::vector<std::vector<Row>> per_point(points);
    const auto count = static_cast<std::int64_t>(points);

#pragma omp parallel for schedule(dynamic) num_threads(effective_threads(threads))
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const std::size_t ie = idx % n_eves.size();
        const std::size_t id = (idx / n_eves.size()) % deltas.size();
        const std::size_t ip = idx / (n_eves.size() * deltas.size());
        per_point[idx] = evaluate_point(spec, powers[ip], deltas[id], n_eves[ie], idx);
    }

    std::vector<Row> rows;
    for (auto& batch : per_point) {
        rows.insert(rows.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key() < b.key(); });

    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << format_double(r.power) << ',' << format_double(r.delta) << ',' << r.n_eve << ','
            << (r.rs ? format_double(*r.rs) : std::string()) << ',' << to_string(r.metric) << ','
            << to_string(r.method) << ',' << r.value << ',' << r.std_error << ',' << r.n_samples << ','
            << r.seed << ',' << r.status << '\n';
    }
    return out.str();
}

void run_sweep(const SweepSpec& spec, const std::filesystem::path& out_path, int threads) {
    const std::string csv = render_sweep(spec, threads);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + out_path.string() + "' for writing");
    }
    out << csv;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + out_path.string() + "'");
    }
}

} // namespace secrelay
