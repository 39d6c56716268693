#pragma once

namespace dengfan {

/// Degree and parameters of a Jacobi polynomial P_n^{(a,b)}.
struct JacobiParams {
    int n = 0;
    double a = 0.0;
    double b = 0.0;

    /// Throws DomainError unless n >= 0, a > -1 and b > -1.
    void validate() const;
};

/// ln Gamma(x) for x > 0. Stirling series above x = 12, upward recurrence below.
double log_gamma(double x);

/// ln |Gamma(x)| for any x that is not a non-positive integer; the sign of Gamma(x)
/// is written to *sign when non-null. Uses reflection for x <= 0.
double log_abs_gamma(double x, int* sign = nullptr);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b).
double log_beta(double a, double b);

/// ln (x)_n for x > 0.
double log_pochhammer(double x, int n);

/// Terminating Gauss series 2F1(-n, beta; gamma; z) = sum_{k=0}^{n} (-n)_k (beta)_k / (gamma)_k z^k / k!.
/// Throws DomainError when gamma + k == 0 for some k < n.
double hyp2f1_terminating(int n, double beta, double gamma, double z);

/// P_n^{(a,b)}(x) by the three-term recurrence.
double jacobi_poly(const JacobiParams& p, double x);

/// Reference route: P_n^{(a,b)}(1 - 2s) = ((a+1)_n / n!) 2F1(-n, 1+a+b+n; a+1; s), s = (1 - x)/2.
/// Kept for cross-checking jacobi_poly. The series cancels heavily near x = -1, so
/// hyp2f1_terminating accumulates it in long double.
double jacobi_poly_hypergeometric(const JacobiParams& p, double x);

} // namespace dengfan
