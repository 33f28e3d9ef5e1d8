#include "secrelay/error.hpp"
#include "secrelay/sweep.hpp"
#include "secrelay/validate.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <tuple>
#include <sstream>
#include <string>
#include <vector>

using namespace secrelay;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) {
        out.push_back(f);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

SweepSpec small_spec() {
    SweepSpec spec;
    spec.config = sanity_preset();
    spec.config.power_grid_dbm = {20.0, 30.0, 40.0};
    spec.config.delta_grid_db = {-90.0, -80.0};
    spec.config.n_eve_grid = {2};
    return spec;
}

} // namespace

TEST_CASE("row count and header") {
    const auto lines = lines_of(render_sweep(small_spec(), 1));
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == kCsvHeader);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields(lines[i]);
        REQUIRE(f.size() == 11);
        CHECK(f[3].empty());
        CHECK(f[4] == "rate");
        CHECK(f[5] == "analytic");
        CHECK(f[10] == "ok");
    }
}

TEST_CASE("rows are sorted by power, delta, n_eve, rs") {
    auto spec = small_spec();
    spec.config.power_grid_dbm = {40.0, 20.0};
    spec.config.delta_grid_db = {-80.0, -90.0};
    spec.config.n_eve_grid = {8, 2};
    spec.config.rs_grid = {4.0, 2.0};
    spec.metrics = {Metric::outage, Metric::rate};
    const auto lines = lines_of(render_sweep(spec, 2));
    REQUIRE(lines.size() == 1 + 2 * 2 * 2 * 3);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto a = fields(lines[i - 1]);
        const auto b = fields(lines[i]);
        const auto key = [](const std::vector<std::string>& f) {
            return std::make_tuple(std::stod(f[0]), std::stod(f[1]), std::stoi(f[2]), !f[3].empty(),
                                   f[3].empty() ? 0.0 : std::stod(f[3]), f[4], f[5]);
        };
        CHECK(key(a) <= key(b));
    }
}

TEST_CASE("sweep output is identical across runs and thread counts") {
    auto spec = small_spec();
    spec.metrics = {Metric::rate, Metric::outage};
    spec.methods = {SweepMethod::analytic, SweepMethod::mc_ln, SweepMethod::mc_composite};
    spec.config.samples = 4000;
    const auto one = render_sweep(spec, 1);
    CHECK(render_sweep(spec, 1) == one);
    CHECK(render_sweep(spec, 4) == one);
    CHECK(render_sweep(spec, 8) == one);

    const auto dir = std::filesystem::temp_directory_path() / "secrelay_sweep_test";
    std::filesystem::create_directories(dir);
    run_sweep(spec, dir / "a.csv", 3);
    std::ifstream in(dir / "a.csv", std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == one);
    std::filesystem::remove_all(dir);
}

TEST_CASE("a failing grid point is flagged and the run continues") {
    auto spec = small_spec();
    spec.config.power_grid_dbm = {40.0, 3000.0};
    const auto lines = lines_of(render_sweep(spec, 1));
    REQUIRE(lines.size() == 5);
    int errors = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields(lines[i]);
        REQUIRE(f.size() == 11);
        if (f[10].rfind("error: ", 0) == 0) {
            ++errors;
            CHECK(f[0] == "3000");
            CHECK(f[6].empty());
        } else {
            CHECK(f[10] == "ok");
        }
    }
    CHECK(errors == 2);
}

TEST_CASE("sweep validation and I/O errors") {
    auto spec = small_spec();
    spec.methods.clear();
    CHECK_THROWS_AS(validate(spec), ConfigError);
    spec = small_spec();
    spec.config.power_grid_dbm.assign(100'001, 0.0);
    CHECK_THROWS_AS(validate(spec), ConfigError);
    spec = small_spec();
    spec.methods = {SweepMethod::mc_ln};
    spec.config.samples = 10;
    CHECK_THROWS_AS(validate(spec), ConfigError);
    CHECK_THROWS_AS(run_sweep(small_spec(), "/nonexistent/dir/out.csv"), IoError);
}

TEST_CASE("method names") {
    CHECK(parse_method("analytic") == SweepMethod::analytic);
    CHECK(parse_method("mc-ln") == SweepMethod::mc_ln);
    CHECK(parse_method("mc-composite") == SweepMethod::mc_composite);
    CHECK(parse_method("reference") == SweepMethod::reference);
    CHECK(to_string(SweepMethod::mc_ln) == "mc-ln");
    CHECK_THROWS_AS(parse_method("exact"), ConfigError);
}

TEST_CASE("emitted columns follow the monotonicity invariants") {
    SweepSpec spec;
    spec.config = sanity_preset();
    spec.config.power_grid_dbm = {10.0, 40.0, 70.0};
    spec.config.delta_grid_db = {-90.0, -80.0, -70.0};
    spec.config.n_eve_grid = {2, 4, 8};
    spec.config.rs_grid = {0.5, 2.0, 4.0};
    spec.metrics = {Metric::rate, Metric::outage};
    const auto lines = lines_of(render_sweep(spec, 1));
    std::map<std::tuple<double, double, int>, double> rate;
    std::map<std::tuple<double, double, int, double>, double> outage;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields(lines[i]);
        const double p = std::stod(f[0]);
        const double d = std::stod(f[1]);
        const int n = std::stoi(f[2]);
        if (f[4] == "rate") {
            rate[{p, d, n}] = std::stod(f[6]);
        } else {
            outage[{p, d, n, std::stod(f[3])}] = std::stod(f[6]);
        }
    }
    for (double p : spec.config.power_grid_dbm) {
        for (double d : spec.config.delta_grid_db) {
            CHECK(rate[{p, d, 4}] <= rate[{p, d, 2}]);
            CHECK(rate[{p, d, 8}] <= rate[{p, d, 4}]);
            for (int n : spec.config.n_eve_grid) {
                CHECK(outage[{p, d, n, 2.0}] >= outage[{p, d, n, 0.5}]);
                CHECK(outage[{p, d, n, 4.0}] >= outage[{p, d, n, 2.0}]);
            }
        }
        for (int n : spec.config.n_eve_grid) {
            CHECK(rate[{p, -80.0, n}] <= rate[{p, -90.0, n}]);
            CHECK(rate[{p, -70.0, n}] <= rate[{p, -80.0, n}]);
        }
    }
}

TEST_CASE("validate_config") {
    auto cfg = sanity_preset();
    cfg.samples = 200'000;
    // K = 24 misses the rate tolerance on this preset; that check alone fails.
    auto report = validate_config(cfg);
    CHECK_FALSE(report.all_passed());
    for (const auto& c : report.checks) {
        const bool is_rate_quad = c.name.find("rate") != std::string::npos &&
                                  c.name.find("quadrature") != std::string::npos;
        CHECK_MESSAGE(c.passed != is_rate_quad, c.name);
    }

    cfg.system.quadrature_order = 96;
    report = validate_config(cfg);
    CHECK(report.all_passed());

    cfg.system.quadrature_order = 2;
    report = validate_config(cfg);
    CHECK_FALSE(report.all_passed());
    bool found = false;
    for (const auto& c : report.checks) {
        if (c.name.find("rate") != std::string::npos && c.name.find("quadrature") != std::string::npos) {
            found = true;
            CHECK_FALSE(c.passed);
            CHECK(c.measured > 1e-6);
        }
    }
    CHECK(found);

    std::ostringstream out;
    print_report(report, out);
    CHECK(out.str().find("FAIL") != std::string::npos);
}
