#include "oracles.hpp"

#include "secrelay/config.hpp"
#include "secrelay/error.hpp"
#include "secrelay/secrecy.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace secrelay;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Endpoints sanity() { return endpoints_for(sanity_preset().system); }

Endpoints make(double mr, double sr, double mb, double sb, double me, double se) {
    return Endpoints{{mr, sr}, {mb, sb}, {me, se}};
}

// Pr[Gamma_FD <= z] from independent LN CDFs.
double fd_oracle(const Endpoints& ep, double z) {
    const double fr = oracle::ln_cdf(ep.gamma_r.mu, ep.gamma_r.sigma, z);
    const double fb = oracle::ln_cdf(ep.gamma_b.mu, ep.gamma_b.sigma, z);
    return fr + fb - fr * fb;
}

} // namespace

TEST_CASE("cdf_gamma_fd") {
    const auto ep = make(0.7, 1.0, 0.7, 2.0, 0.0, 1.0);
    CHECK(near(cdf_gamma_fd(ep, std::exp(0.7)), 0.75, 1e-15));
    CHECK(cdf_gamma_fd(ep, 0.0) == 0.0);
    CHECK(cdf_gamma_fd(ep, 1e-200) < 1e-12);
    CHECK(cdf_gamma_fd(ep, 1e200) == 1.0);
    CHECK_THROWS_AS(cdf_gamma_fd(ep, -1.0), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mu(-5.0, 5.0);
    std::uniform_real_distribution<double> sg(0.2, 2.5);
    std::uniform_real_distribution<double> lz(-12.0, 12.0);
    for (int i = 0; i < 2000; ++i) {
        const auto e = make(mu(rng), sg(rng), mu(rng), sg(rng), 0.0, 1.0);
        const double z = std::exp(lz(rng));
        const double v = cdf_gamma_fd(e, z);
        CHECK(near(v, fd_oracle(e, z), 1e-12));
        CHECK(near(survival_gamma_fd(e, z), 1.0 - fd_oracle(e, z), 1e-12));
        CHECK(v >= std::max(oracle::ln_cdf(e.gamma_r.mu, e.gamma_r.sigma, z),
                            oracle::ln_cdf(e.gamma_b.mu, e.gamma_b.sigma, z)) -
                       1e-15);
    }
}

TEST_CASE("avg_secrecy_rate limits and errors") {
    auto ep = sanity();
    ep.gamma_e.mu = 30.0;
    CHECK(avg_secrecy_rate(ep).value < 1e-6);
    CHECK(avg_secrecy_rate_reference(ep).value < 1e-6);

    const auto iid = make(0.5, 1.0, 0.5, 1.0, 0.5, 1.0);
    CHECK(avg_secrecy_rate_reference(iid).value > 0.0);

    auto bad = sanity();
    bad.gamma_b.sigma = 0.0;
    CHECK_THROWS_AS(avg_secrecy_rate(bad), DomainError);
    CHECK_THROWS_AS(avg_secrecy_rate(sanity(), 0), ConfigError);
    CHECK_THROWS_AS(avg_secrecy_rate(sanity(), 129), ConfigError);
    CHECK_THROWS_AS(avg_secrecy_rate_reference(sanity(), 1e-2), ConfigError);
}

TEST_CASE("rate reference matches an independent Simpson integration") {
    const auto ep = sanity();
    // Integrate in t = ln(1+z) over a wide window; the integrand is smooth there.
    auto g = [&](double t) {
        const double z = std::expm1(t);
        const double fe = oracle::ln_cdf(ep.gamma_e.mu, ep.gamma_e.sigma, z);
        return fe * (1.0 - fd_oracle(ep, z));
    };
    const double simpson = oracle::simpson(g, 0.0, 60.0, 200000) / std::numbers::ln2;
    const auto ref = avg_secrecy_rate_reference(ep);
    CHECK(ref.method == Method::reference);
    CHECK(near(ref.value, simpson, 1e-9 * simpson));
    CHECK(near(ref.value, 0.0953595148, 1e-9));
}

TEST_CASE("closed-erfc integrand equals the CDF form") {
    const auto ep = sanity();
    for (double z = 1e-6; z < 1e8; z *= 1.7) {
        const double a = rate_integrand(ep, z, RateIntegrand::cdf_form);
        const double b = rate_integrand(ep, z, RateIntegrand::erfc_form);
        // 1 - F_FD cancels in the tail, so compare against the integrand's peak (~1e-3).
        CHECK(near(a, b, 1e-15));
    }
    const double cdf_form = avg_secrecy_rate_reference(ep, 1e-11, RateIntegrand::cdf_form).value;
    const double erfc_form = avg_secrecy_rate_reference(ep, 1e-11, RateIntegrand::erfc_form).value;
    CHECK(near(cdf_form, erfc_form, 1e-10 * cdf_form));
}

TEST_CASE("Laguerre rate converges to the reference as K grows") {
    const auto ep = sanity();
    const double ref = avg_secrecy_rate_reference(ep, 1e-11).value;
    const auto k24 = avg_secrecy_rate(ep, 24);
    CHECK(k24.method == Method::quadrature);
    CHECK(k24.quadrature_order == 24);
    // Measured: 4.2e-3 relative at K=24, 4.8e-7 at K=96.
    const double e24 = std::abs(k24.value - ref) / ref;
    const double e48 = std::abs(avg_secrecy_rate(ep, 48).value - ref) / ref;
    const double e96 = std::abs(avg_secrecy_rate(ep, 96).value - ref) / ref;
    CHECK(e24 < 1e-2);
    CHECK(e48 < e24);
    CHECK(e96 < 1e-6);
}

TEST_CASE("secrecy_outage examples") {
    const auto ep = sanity();
    auto cold = ep;
    cold.gamma_r.mu = 0.0;
    cold.gamma_b.mu = 0.0;
    CHECK(secrecy_outage(cold, 60.0).value > 1.0 - 1e-12);

    const double q2 = secrecy_outage(ep, 2.0).value;
    const double r2 = secrecy_outage_reference(ep, 2.0).value;
    const double r4 = secrecy_outage_reference(ep, 4.0).value;
    CHECK(near(q2, r2, 1e-8));
    CHECK(r4 > r2);
    CHECK(q2 >= 0.0);
    CHECK(q2 <= 1.0);

    auto sharp = ep;
    sharp.gamma_e.sigma = 1e-6;
    const double rs = 2.0;
    const double v = std::exp2(rs) * (std::exp(sharp.gamma_e.mu) + 1.0) - 1.0;
    CHECK(near(secrecy_outage(sharp, rs).value, fd_oracle(sharp, v), 1e-6));

    auto absent = ep;
    absent.gamma_e = {-30.0, 0.1};
    CHECK(secrecy_outage_reference(absent, 1e-9).value < 1e-6);

    CHECK_THROWS_AS(secrecy_outage(ep, 0.0), DomainError);
    CHECK_THROWS_AS(secrecy_outage(ep, -1.0), DomainError);
    CHECK_THROWS_AS(secrecy_outage_reference(ep, 0.0), DomainError);
}

TEST_CASE("Hermite outage converges to the reference") {
    const auto ep = make(-1.0, 2.0, 1.0, 2.0, 0.5, 2.0);
    const double ref = secrecy_outage_reference(ep, 0.5).value;
    const double e24 = std::abs(secrecy_outage(ep, 0.5, 24).value - ref);
    const double e64 = std::abs(secrecy_outage(ep, 0.5, 64).value - ref);
    CHECK(e64 < 1e-9);
    CHECK(e64 <= e24);
}

TEST_CASE("estimator monotonicity on random endpoints") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> mu(-4.0, 4.0);
    std::uniform_real_distribution<double> sg(0.3, 2.0);
    std::uniform_real_distribution<double> rsd(0.1, 4.0);
    for (int i = 0; i < 200; ++i) {
        const auto ep = make(mu(rng), sg(rng), mu(rng), sg(rng), mu(rng), sg(rng));
        const double rs = rsd(rng);
        const double rate = avg_secrecy_rate(ep).value;
        const double out = secrecy_outage(ep, rs).value;
        CHECK(rate >= 0.0);
        CHECK(out >= 0.0);
        CHECK(out <= 1.0);

        auto e = ep;
        e.gamma_e.mu += 0.5;
        CHECK(avg_secrecy_rate(e).value <= rate);
        CHECK(secrecy_outage(e, rs).value >= out);
        e = ep;
        e.gamma_b.mu += 0.5;
        CHECK(avg_secrecy_rate(e).value >= rate);
        CHECK(secrecy_outage(e, rs).value <= out);
        e = ep;
        e.gamma_r.mu += 0.5;
        CHECK(avg_secrecy_rate(e).value >= rate);
        CHECK(secrecy_outage(e, rs).value <= out);
        CHECK(secrecy_outage(ep, 2.0 * rs).value >= out);
    }
}
