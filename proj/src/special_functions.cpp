#include "dengfan/special_functions.hpp"

#include "dengfan/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace dengfan {

namespace {

// B_{2k} / (2k (2k - 1)) for k = 1..8.
constexpr std::array<double, 8> kStirlingCoefficients = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

constexpr double kStirlingThreshold = 12.0;

double stirling_log_gamma(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double power = inv;
    for (double c : kStirlingCoefficients) {
        series += c * power;
        power *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

} // namespace

void JacobiParams::validate() const {
    if (n < 0) throw DomainError("jacobi: degree must be non-negative");
    if (!(a > -1.0)) throw DomainError("jacobi: parameter a must exceed -1");
    if (!(b > -1.0)) throw DomainError("jacobi: parameter b must exceed -1");
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
    if (!std::isfinite(x)) return x;
    if (x >= kStirlingThreshold) return stirling_log_gamma(x);
    if (x == 1.0 || x == 2.0) return 0.0;

    // Gamma(x) = Gamma(x + k) / (x (x+1) ... (x+k-1)); the product stays well inside double range.
    double product = 1.0;
    double shifted = x;
    while (shifted < kStirlingThreshold) {
        product *= shifted;
        shifted += 1.0;
    }
    return stirling_log_gamma(shifted) - std::log(product);
}

double log_abs_gamma(double x, int* sign) {
    if (x > 0.0) {
        if (sign) *sign = 1;
        return log_gamma(x);
    }
    if (x == std::floor(x)) throw DomainError("log_abs_gamma: pole at non-positive integer");
    // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    const double s = std::sin(std::numbers::pi * x);
    if (sign) *sign = s > 0.0 ? 1 : -1;
    return std::log(std::numbers::pi / std::abs(s)) - log_gamma(1.0 - x);
}

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("log_beta: arguments must be positive");
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_pochhammer(double x, int n) {
    if (n < 0) throw DomainError("log_pochhammer: n must be non-negative");
    if (!(x > 0.0)) throw DomainError("log_pochhammer: x must be positive");
    if (n == 0) return 0.0;
    if (n <= 16) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += std::log(x + k);
        return acc;
    }
    return log_gamma(x + n) - log_gamma(x);
}

double hyp2f1_terminating(int n, double beta, double gamma, double z) {
    if (n < 0) throw DomainError("hyp2f1_terminating: n must be non-negative");
    // Alternating terms can exceed the sum by many orders of magnitude; accumulate in extended precision.
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < n; ++k) {
        const long double denom = static_cast<long double>(gamma) + k;
        if (denom == 0.0L) {
            throw DomainError("hyp2f1_terminating: gamma + " + std::to_string(k) + " vanishes");
        }
        term *= static_cast<long double>(k - n) * (static_cast<long double>(beta) + k) / (denom * (k + 1)) * z;
        sum += term;
    }
    return static_cast<double>(sum);
}

double jacobi_poly(const JacobiParams& p, double x) {
    p.validate();
    const double a = p.a;
    const double b = p.b;
    if (p.n == 0) return 1.0;

    double prev = 1.0;
    double curr = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int k = 2; k <= p.n; ++k) {
        const double s = 2.0 * k + a + b;
        const double lead = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double next = (c1 * curr - c2 * prev) / lead;
        prev = curr;
        curr = next;
    }
    return curr;
}

double jacobi_poly_hypergeometric(const JacobiParams& p, double x) {
    p.validate();
    const double s = 0.5 * (1.0 - x);
    const double prefactor = std::exp(log_pochhammer(p.a + 1.0, p.n) - log_gamma(p.n + 1.0));
    return prefactor * hyp2f1_terminating(p.n, 1.0 + p.a + p.b + p.n, p.a + 1.0, s);
}

} // namespace dengfan
