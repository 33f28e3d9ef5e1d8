#include "secrelay/numerics.hpp"

#include "secrelay/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>

namespace secrelay::numerics {

double erfc(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("erfc: non-finite argument");
    }
    return std::erfc(x);
}

namespace {

// Shift the argument above this before using the asymptotic series.
constexpr double kAsymptoticStart = 10.0;

void require_positive(double m, const char* what) {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError(std::string(what) + ": argument must be positive and finite");
    }
}

} // namespace

double digamma(double m) {
    require_positive(m, "digamma");
    double shift = 0.0;
    double x = m;
    while (x < kAsymptoticStart) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli terms B_2k / (2k x^2k), k = 1..7
    const double series =
        inv2 * (1.0 / 12 -
                inv2 * (1.0 / 120 -
                        inv2 * (1.0 / 252 -
                                inv2 * (1.0 / 240 -
                                        inv2 * (1.0 / 132 -
                                                inv2 * (691.0 / 32760 - inv2 / 12.0))))));
    return shift + std::log(x) - 0.5 * inv - series;
}

double trigamma(double m) {
    require_positive(m, "trigamma");
    double shift = 0.0;
    double x = m;
    while (x < kAsymptoticStart) {
        shift += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv * (1.0 +
               inv * (0.5 +
                      inv * (1.0 / 6 -
                             inv2 * (1.0 / 30 -
                                     inv2 * (1.0 / 42 -
                                             inv2 * (1.0 / 30 -
                                                     inv2 * (5.0 / 66 -
                                                             inv2 * (691.0 / 2730 -
                                                                     inv2 * 7.0 / 6))))))));
    return shift + series;
}

double laguerre_polynomial(int n, double x) {
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 1.0 - x;
    for (int j = 1; j < n; ++j) {
        const double next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_polynomial(int n, double x) {
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int j = 1; j < n; ++j) {
        const double next = 2.0 * x * cur - 2.0 * j * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

void check_order(int order) {
    if (order < 1 || order > kMaxQuadratureOrder) {
        throw ConfigError("quadrature order must be in [1, " + std::to_string(kMaxQuadratureOrder) +
                          "], got " + std::to_string(order));
    }
}

// Eigenvalues of the symmetric tridiagonal matrix (diag, off) by Sturm-sequence
// bisection. off[i] couples rows i and i+1. Returned ascending.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& off) {
    const auto n = diag.size();
    double lo = diag[0];
    double hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    // Number of eigenvalues strictly below x.
    auto count_below = [&](double x) {
        std::size_t count = 0;
        double q = diag[0] - x;
        for (std::size_t i = 0;; ++i) {
            if (q < 0.0) {
                ++count;
            }
            if (i + 1 == n) {
                break;
            }
            if (q == 0.0) {
                q = std::numeric_limits<double>::epsilon() * (std::abs(off[i]) + 1.0);
            }
            q = diag[i + 1] - x - off[i] * off[i] / q;
        }
        return count;
    };

    std::vector<double> eig(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = lo;
        double b = hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) {
                break;
            }
            if (count_below(mid) > k) {
                b = mid;
            } else {
                a = mid;
            }
        }
        eig[k] = 0.5 * (a + b);
    }
    return eig;
}

} // namespace

QuadratureRule gauss_laguerre_rule(int order) {
    check_order(order);
    const auto n = static_cast<std::size_t>(order);
    std::vector<double> diag(n);
    std::vector<double> off(n > 0 ? n - 1 : 0);
    for (std::size_t j = 0; j < n; ++j) {
        diag[j] = 2.0 * static_cast<double>(j) + 1.0;
        if (j + 1 < n) {
            off[j] = static_cast<double>(j + 1);
        }
    }
    std::vector<double> nodes = tridiagonal_eigenvalues(diag, off);

    std::vector<double> weights(n);
    for (std::size_t k = 0; k < n; ++k) {
        double x = nodes[k];
        // Newton polish on L_K using x L_K'(x) = K (L_K - L_{K-1}).
        for (int it = 0; it < 3; ++it) {
            const double lk = laguerre_polynomial(order, x);
            const double lkm1 = laguerre_polynomial(order - 1, x);
            const double deriv = order * (lk - lkm1) / x;
            if (deriv == 0.0) {
                break;
            }
            const double step = lk / deriv;
            x -= step;
            if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * x) {
                break;
            }
        }
        nodes[k] = x;
        const double scaled = (order + 1.0) * laguerre_polynomial(order + 1, x);
        weights[k] = x / (scaled * scaled);
    }
    return QuadratureRule(RuleKind::laguerre, std::move(nodes), std::move(weights));
}

QuadratureRule gauss_hermite_rule(int order) {
    check_order(order);
    const auto n = static_cast<std::size_t>(order);
    std::vector<double> diag(n, 0.0);
    std::vector<double> off(n > 0 ? n - 1 : 0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        off[j] = std::sqrt(0.5 * static_cast<double>(j + 1));
    }
    std::vector<double> nodes = tridiagonal_eigenvalues(diag, off);

    // Orthonormal Hermite recurrence: p_K and p_{K-1} at x. The weight
    // sqrt(pi) 2^{K-1} K! / (K^2 H_{K-1}(x)^2) equals 1 / (K p_{K-1}(x)^2).
    auto orthonormal = [order](double x) {
        double prev = 0.0;
        double cur = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
        for (int j = 1; j <= order; ++j) {
            const double next = x * std::sqrt(2.0 / j) * cur - std::sqrt((j - 1.0) / j) * prev;
            prev = cur;
            cur = next;
        }
        return std::pair{cur, prev};
    };

    std::vector<double> weights(n);
    for (std::size_t k = 0; k < n; ++k) {
        double x = nodes[k];
        for (int it = 0; it < 3; ++it) {
            const auto [pk, pkm1] = orthonormal(x);
            const double deriv = std::sqrt(2.0 * order) * pkm1;
            if (deriv == 0.0) {
                break;
            }
            const double step = pk / deriv;
            x -= step;
            if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
                break;
            }
        }
        nodes[k] = x;
    }
    // Enforce exact antisymmetry of the node set.
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double h = 0.5 * (nodes[n - 1 - k] - nodes[k]);
        nodes[k] = -h;
        nodes[n - 1 - k] = h;
    }
    if (n % 2 == 1) {
        nodes[n / 2] = 0.0;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double pkm1 = orthonormal(nodes[k]).second;
        weights[k] = 1.0 / (order * pkm1 * pkm1);
    }
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double w = 0.5 * (weights[k] + weights[n - 1 - k]);
        weights[k] = w;
        weights[n - 1 - k] = w;
    }
    return QuadratureRule(RuleKind::hermite, std::move(nodes), std::move(weights));
}

namespace {

template <typename Builder>
const QuadratureRule& cached_rule(std::map<int, QuadratureRule>& cache, std::mutex& mu, int order,
                                  Builder build) {
    std::lock_guard lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, build(order)).first;
    }
    return it->second;
}

} // namespace

const QuadratureRule& cached_laguerre_rule(int order) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mu;
    return cached_rule(cache, mu, order, gauss_laguerre_rule);
}

const QuadratureRule& cached_hermite_rule(int order) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mu;
    return cached_rule(cache, mu, order, gauss_hermite_rule);
}

namespace {

// Kronrod 15-point abscissae (positive half) and weights; Gauss 7-point weights
// sit on the odd-indexed Kronrod abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
    double abs_value;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename G>
Panel gauss_kronrod(const G& g, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = g(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::abs(kronrod);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = g(center - dx);
        const double f2 = g(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    return Panel{lo, hi, kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half)};
}

constexpr int kMaxPanels = 20000;

} // namespace

IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                     double rel_tol, std::span<const double> breakpoints) {
    if (!(rel_tol >= 1e-12 && rel_tol <= 1e-3)) {
        throw ConfigError("adaptive_integrate: rel_tol must lie in [1e-12, 1e-3]");
    }
    if (!std::isfinite(a) || std::isnan(b) || b == -kInfinity || !(b > a)) {
        throw DomainError("adaptive_integrate: need finite a < b (b may be +inf)");
    }
    const bool semi_infinite = std::isinf(b);

    auto integrand = [&](double t) -> double {
        if (!semi_infinite) {
            return f(t);
        }
        const double one_minus = 1.0 - t;
        const double x = a + t / one_minus;
        const double v = f(x);
        return v == 0.0 ? 0.0 : v / (one_minus * one_minus);
    };

    std::vector<double> cuts{semi_infinite ? 0.0 : a};
    std::vector<double> interior;
    for (double x : breakpoints) {
        if (x > a && x < b) {
            interior.push_back(semi_infinite ? (x - a) / (1.0 + (x - a)) : x);
        }
    }
    std::sort(interior.begin(), interior.end());
    for (double t : interior) {
        if (t > cuts.back()) {
            cuts.push_back(t);
        }
    }
    const double upper = semi_infinite ? 1.0 : b;
    if (upper > cuts.back()) {
        cuts.push_back(upper);
    }

    auto finite_panel = [](const Panel& p) { return std::isfinite(p.value) && std::isfinite(p.error); };

    std::priority_queue<Panel> heap;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Panel p = gauss_kronrod(integrand, cuts[i], cuts[i + 1]);
        if (!finite_panel(p)) {
            throw AccuracyError("adaptive_integrate: integrand is not finite on the initial panels", 0.0,
                                kInfinity);
        }
        heap.push(p);
    }

    // Exact re-summation of the live panels; running sums drift slightly.
    auto totals = [&heap]() {
        auto copy = heap;
        std::array<double, 3> sums{0.0, 0.0, 0.0};
        while (!copy.empty()) {
            sums[0] += copy.top().value;
            sums[1] += copy.top().error;
            sums[2] += copy.top().abs_value;
            copy.pop();
        }
        return sums;
    };

    constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();
    auto converged = [rel_tol](double v, double e, double av) {
        return e <= rel_tol * std::abs(v) || e <= kRoundoff * av;
    };

    auto [value, error, abs_value] = totals();
    while (!converged(value, error, abs_value)) {
        if (static_cast<int>(heap.size()) >= kMaxPanels) {
            const auto exact = totals();
            value = exact[0];
            error = exact[1];
            abs_value = exact[2];
            if (converged(value, error, abs_value)) {
                break;
            }
            throw AccuracyError("adaptive_integrate: panel budget exhausted", value, error);
        }
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            throw AccuracyError("adaptive_integrate: interval cannot be subdivided further", value, error);
        }
        heap.pop();
        const Panel left = gauss_kronrod(integrand, worst.lo, mid);
        const Panel right = gauss_kronrod(integrand, mid, worst.hi);
        if (!finite_panel(left) || !finite_panel(right)) {
            throw AccuracyError("adaptive_integrate: integrand is not finite (singularity?)", value, error);
        }
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        abs_value += left.abs_value + right.abs_value - worst.abs_value;
        heap.push(left);
        heap.push(right);
        if (converged(value, error, abs_value)) {
            const auto exact = totals();
            value = exact[0];
            error = exact[1];
            abs_value = exact[2];
        }
    }
    return IntegrationResult{value, error, static_cast<int>(heap.size())};
}

} // namespace secrelay::numerics
