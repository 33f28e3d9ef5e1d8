#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace secrelay::numerics {

double erfc(double x);

// psi(m), m > 0.
double digamma(double m);

// psi'(m) = zeta(2, m), m > 0.
double trigamma(double m);

enum class RuleKind { laguerre, hermite };

// Gauss rule for weight e^{-x} on [0, inf) (laguerre) or e^{-x^2} on the
// real line (hermite). Nodes ascending, weights positive. Immutable.
class QuadratureRule {
public:
    RuleKind kind() const noexcept { return kind_; }
    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }

private:
    QuadratureRule(RuleKind kind, std::vector<double> nodes, std::vector<double> weights)
        : kind_(kind), nodes_(std::move(nodes)), weights_(std::move(weights)) {}

    friend QuadratureRule gauss_laguerre_rule(int order);
    friend QuadratureRule gauss_hermite_rule(int order);

    RuleKind kind_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

inline constexpr int kMaxQuadratureOrder = 128;

QuadratureRule gauss_laguerre_rule(int order);
QuadratureRule gauss_hermite_rule(int order);

// Cached rules; the returned reference lives for the whole program.
const QuadratureRule& cached_laguerre_rule(int order);
const QuadratureRule& cached_hermite_rule(int order);

// Polynomial evaluation used by the rule builders, exposed for residual tests.
double laguerre_polynomial(int n, double x);
double hermite_polynomial(int n, double x); // physicists' H_n

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b]. An
// infinite upper limit is mapped to (0, 1] via x = a + t/(1-t). Optional
// breakpoints (in x) seed the initial partition. rel_tol must lie in
// [1e-12, 1e-3]. Throws AccuracyError with the best estimate if the
// interval budget runs out.
IntegrationResult adaptive_integrate(const std::function<double(double)>& f,
                                     double a, double b, double rel_tol,
                                     std::span<const double> breakpoints = {});

} // namespace secrelay::numerics
