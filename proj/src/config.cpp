#include "secrelay/config.hpp"

#include "secrelay/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace secrelay {

SystemConfig ExperimentConfig::at(double power_dbm, double delta_db, int n_eve) const {
    SystemConfig cfg = system;
    cfg.power_a_dbm = power_dbm;
    cfg.power_r_dbm = power_dbm;
    cfg.delta_db = delta_db;
    cfg.n_eve = n_eve;
    return cfg;
}

ExperimentConfig sanity_preset() { return ExperimentConfig{}; }

ExperimentConfig rate_vs_power_preset() {
    ExperimentConfig cfg;
    cfg.power_grid_dbm = parse_range("0:100:5");
    cfg.delta_grid_db = {-90.0, -85.0, -80.0, -75.0, -70.0};
    cfg.n_eve_grid = {2, 4, 8};
    return cfg;
}

ExperimentConfig outage_vs_power_preset() {
    ExperimentConfig cfg;
    cfg.power_grid_dbm = parse_range("0:100:5");
    cfg.delta_grid_db = {-90.0, -80.0, -70.0};
    cfg.n_eve_grid = {2};
    cfg.rs_grid = {2.0, 4.0};
    return cfg;
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_number(const std::string& text, T& out) {
    const std::string t = trim(text);
    if (t.empty()) {
        return false;
    }
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (*first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        return false;
    }
    if constexpr (std::is_floating_point_v<T>) {
        return std::isfinite(out);
    }
    return true;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{
        "d_ab_m",           "relay_fraction",   "path_loss_exponent", "nakagami_m",  "shadow_sd_db",
        "power_dbm",        "power_split",      "delta_db",           "n_eve",       "eve_mode",
        "eve_mu",           "eve_sigma",        "eve_mean_snr_db",    "eve_shadow_sd_db",
        "rs_target",        "quadrature_order", "samples",            "seed",
    };
    return keys;
}

} // namespace

std::vector<double> parse_range(const std::string& text) {
    const auto parts = split(trim(text), ':');
    if (parts.size() == 1) {
        double v = 0.0;
        if (!parse_number(parts[0], v)) {
            throw ConfigError("not a number: '" + text + "'");
        }
        return {v};
    }
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    if (parts.size() != 3 || !parse_number(parts[0], start) || !parse_number(parts[1], stop) ||
        !parse_number(parts[2], step)) {
        throw ConfigError("expected start:stop:step, got '" + text + "'");
    }
    if (!(step > 0.0) || stop < start) {
        throw ConfigError("range needs step > 0 and stop >= start: '" + text + "'");
    }
    const double span = (stop - start) / step;
    if (span > 1e5) {
        throw ConfigError("range has too many points: '" + text + "'");
    }
    const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        values.push_back(start + static_cast<double>(i) * step);
    }
    return values;
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg = sanity_preset();
    std::set<std::string> seen;
    std::string eve_mode = "direct";
    EveDirect direct;
    EveComposite composite;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected key=value", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (known_keys().count(key) == 0) {
            throw ParseError("unknown key '" + key + "'", line_no);
        }
        if (!seen.insert(key).second) {
            throw ParseError("duplicate key '" + key + "'", line_no);
        }
        auto bad = [&](const std::string& why) {
            return ParseError("invalid value for '" + key + "': " + why + " ('" + value + "')", line_no);
        };
        auto number = [&]() {
            double v = 0.0;
            if (!parse_number(value, v)) {
                throw bad("not a number");
            }
            return v;
        };
        auto number_list = [&]() {
            std::vector<double> out;
            for (const auto& item : split(value, ',')) {
                double v = 0.0;
                if (!parse_number(item, v)) {
                    throw bad("not a comma-separated list of numbers");
                }
                out.push_back(v);
            }
            if (out.empty()) {
                throw bad("empty list");
            }
            return out;
        };
        auto unsigned_value = [&]() {
            std::uint64_t v = 0;
            if (!parse_number(value, v)) {
                throw bad("not a non-negative integer");
            }
            return v;
        };

        if (key == "d_ab_m") {
            cfg.system.d_ab_m = number();
        } else if (key == "relay_fraction") {
            cfg.system.relay_fraction = number();
        } else if (key == "path_loss_exponent") {
            cfg.system.path_loss_exponent = number();
        } else if (key == "nakagami_m") {
            cfg.system.nakagami_m = number();
        } else if (key == "shadow_sd_db") {
            cfg.system.shadow_sd_db = number();
        } else if (key == "power_dbm") {
            try {
                cfg.power_grid_dbm = parse_range(value);
            } catch (const ConfigError& e) {
                throw bad(e.what());
            }
        } else if (key == "power_split") {
            if (value != "equal") {
                throw bad("only 'equal' is supported");
            }
        } else if (key == "delta_db") {
            cfg.delta_grid_db = number_list();
        } else if (key == "n_eve") {
            cfg.n_eve_grid.clear();
            for (const auto& item : split(value, ',')) {
                int v = 0;
                if (!parse_number(item, v) || v < 1) {
                    throw bad("not a comma-separated list of positive integers");
                }
                cfg.n_eve_grid.push_back(v);
            }
            if (cfg.n_eve_grid.empty()) {
                throw bad("empty list");
            }
        } else if (key == "eve_mode") {
            if (value != "direct" && value != "composite") {
                throw bad("expected 'direct' or 'composite'");
            }
            eve_mode = value;
        } else if (key == "eve_mu") {
            direct.mu = number();
        } else if (key == "eve_sigma") {
            direct.sigma = number();
        } else if (key == "eve_mean_snr_db") {
            composite.mean_snr_db = number();
        } else if (key == "eve_shadow_sd_db") {
            composite.shadow_sd_db = number();
        } else if (key == "rs_target") {
            cfg.rs_grid = number_list();
        } else if (key == "quadrature_order") {
            const auto k = unsigned_value();
            if (k < 1 || k > 128) {
                throw bad("must be in [1, 128]");
            }
            cfg.system.quadrature_order = static_cast<int>(k);
        } else if (key == "samples") {
            cfg.samples = unsigned_value();
        } else if (key == "seed") {
            cfg.seed = unsigned_value();
        }
    }
    if (eve_mode == "direct") {
        cfg.system.eve = direct;
    } else {
        cfg.system.eve = composite;
    }

    // Structural checks on every grid point.
    for (double p : cfg.power_grid_dbm) {
        for (double d : cfg.delta_grid_db) {
            for (int n : cfg.n_eve_grid) {
                validate(cfg.at(p, d, n));
            }
        }
    }
    for (double rs : cfg.rs_grid) {
        if (!(rs > 0.0)) {
            throw ConfigError("rs_target values must be positive");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file '" + path.string() + "'");
    }
    return parse_config(in);
}

} // namespace secrelay
