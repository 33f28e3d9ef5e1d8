#pragma once

// Independent reference computations for the unit and acceptance tests.
// Nothing here calls into the library.

#include <cmath>
#include <numbers>

namespace oracle {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

// erfc via the Maclaurin series of erf for |x| < 3 and a Lentz continued
// fraction above, both in long double.
inline double erfc(double xd) {
    const long double x = xd;
    if (x < 0) {
        return static_cast<double>(2.0L - static_cast<long double>(erfc(-xd)));
    }
    if (x < 3.0L) {
        long double term = x;
        long double sum = x;
        for (int n = 1; n < 200; ++n) {
            term *= -x * x / n;
            const long double add = term / (2 * n + 1);
            sum += add;
            if (std::fabs(add) < 1e-22L * std::fabs(sum)) {
                break;
            }
        }
        const long double erf = 2.0L / std::sqrt(std::numbers::pi_v<long double>) * sum;
        return static_cast<double>(1.0L - erf);
    }
    // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    const long double tiny = 1e-300L;
    long double f = x;
    long double c = x;
    long double d = 0.0L;
    for (int n = 1; n < 500; ++n) {
        const long double a = n / 2.0L;
        d = x + a * d;
        d = d == 0 ? tiny : d;
        c = x + a / c;
        c = c == 0 ? tiny : c;
        d = 1.0L / d;
        const long double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0L) < 1e-20L) {
            break;
        }
    }
    return static_cast<double>(std::exp(-x * x) / std::sqrt(std::numbers::pi_v<long double>) / f);
}

inline double normal_cdf(double x) { return 0.5 * erfc(-x / std::numbers::sqrt2); }

// Log-normal CDF written out directly.
inline double ln_cdf(double mu, double sigma, double z) {
    if (z <= 0) {
        return 0.0;
    }
    return normal_cdf((std::log(z) - mu) / sigma);
}

// Cumulant -> LN parameters in the literal form
//   mu = ln(k1^2) - ln sqrt(k1^2 + k2),  sigma^2 = ln(k1^2 + k2) - ln(k1^2).
struct LnParams {
    double mu;
    double sigma;
};
inline LnParams ln_from_cumulants(double k1, double k2) {
    const double s = k1 * k1;
    return LnParams{std::log(s) - std::log(std::sqrt(s + k2)), std::sqrt(std::log(s + k2) - std::log(s))};
}

// Composite simpson on [a, b] with n (even) panels.
template <typename F>
double simpson(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    }
    return sum * h / 3.0;
}

} // namespace oracle
