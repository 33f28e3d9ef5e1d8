// secrelay: sweeps, validation and quadrature-rule dumps for the full-duplex
// relay secrecy model.

#include "secrelay/config.hpp"
#include "secrelay/error.hpp"
#include "secrelay/numerics.hpp"
#include "secrelay/sweep.hpp"
#include "secrelay/validate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kValidationFailed = 1, kConfigError = 2, kIoError = 3 };

struct SweepOptions {
    std::string config_path;
    std::string preset;
    std::string output;
    std::vector<std::string> methods;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    int threads = 0;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& opt) {
    cmd->add_option("--config", opt.config_path, "key=value config file");
    cmd->add_option("--preset", opt.preset, "built-in parameter set")
        ->check(CLI::IsMember({"sanity", "rate-vs-power", "outage-vs-power"}));
    cmd->add_option("--output,-o", opt.output, "CSV output path")->required();
    cmd->add_option("--method,--mode", opt.methods, "analytic, reference, mc-ln, mc-composite")
        ->delimiter(',');
    cmd->add_option("--samples", opt.samples, "Monte-Carlo samples per point");
    cmd->add_option("--seed", opt.seed, "Monte-Carlo seed");
    cmd->add_option("--threads", opt.threads, "worker threads (0: OpenMP default)");
}

secrelay::ExperimentConfig resolve_config(const std::string& path, const std::string& preset) {
    if (!path.empty() && !preset.empty()) {
        throw secrelay::ConfigError("--config and --preset are mutually exclusive");
    }
    if (!path.empty()) {
        return secrelay::load_config(path);
    }
    if (preset == "rate-vs-power") {
        return secrelay::rate_vs_power_preset();
    }
    if (preset == "outage-vs-power") {
        return secrelay::outage_vs_power_preset();
    }
    return secrelay::sanity_preset();
}

int run_sweep_command(const SweepOptions& opt, secrelay::Metric metric) {
    secrelay::SweepSpec spec;
    spec.config = resolve_config(opt.config_path, opt.preset);
    if (opt.samples) {
        spec.config.samples = *opt.samples;
    }
    if (opt.seed) {
        spec.config.seed = *opt.seed;
    }
    spec.metrics = {metric};
    if (!opt.methods.empty()) {
        spec.methods.clear();
        for (const auto& m : opt.methods) {
            spec.methods.push_back(secrelay::parse_method(m));
        }
    }
    secrelay::run_sweep(spec, opt.output, opt.threads);
    return kOk;
}

int run_rules(const std::string& kind, int order) {
    const auto rule = kind == "laguerre" ? secrelay::numerics::gauss_laguerre_rule(order)
                                         : secrelay::numerics::gauss_hermite_rule(order);
    std::printf("index,node,weight\n");
    for (int k = 0; k < rule.order(); ++k) {
        std::printf("%d,%.17g,%.17g\n", k + 1, rule.nodes()[static_cast<std::size_t>(k)],
                    rule.weights()[static_cast<std::size_t>(k)]);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy rate and outage of a full-duplex decode-and-forward relay"};
    app.require_subcommand(1);

    SweepOptions rate_opt;
    auto* rate = app.add_subcommand("rate-sweep", "average secrecy rate over the config grid");
    add_sweep_options(rate, rate_opt);

    SweepOptions outage_opt;
    auto* outage = app.add_subcommand("outage-sweep", "secrecy outage probability over the config grid");
    add_sweep_options(outage, outage_opt);

    std::string validate_config;
    std::string validate_preset;
    auto* validate = app.add_subcommand("validate", "quadrature, Monte-Carlo and monotonicity checks");
    validate->add_option("--config", validate_config, "key=value config file");
    validate->add_option("--preset", validate_preset, "built-in parameter set")
        ->check(CLI::IsMember({"sanity", "rate-vs-power", "outage-vs-power"}));

    std::string kind;
    int order = 24;
    auto* rules = app.add_subcommand("rules", "dump Gauss quadrature nodes and weights as CSV");
    rules->add_option("--kind", kind, "laguerre or hermite")->required()->check(CLI::IsMember({"laguerre", "hermite"}));
    rules->add_option("--order", order, "number of nodes K")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*rate) {
            return run_sweep_command(rate_opt, secrelay::Metric::rate);
        }
        if (*outage) {
            return run_sweep_command(outage_opt, secrelay::Metric::outage);
        }
        if (*validate) {
            const auto cfg = resolve_config(validate_config, validate_preset);
            const auto report = secrelay::validate_config(cfg);
            secrelay::print_report(report, std::cout);
            return report.all_passed() ? kOk : kValidationFailed;
        }
        if (*rules) {
            return run_rules(kind, order);
        }
    } catch (const secrelay::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const secrelay::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
    return kOk;
}
