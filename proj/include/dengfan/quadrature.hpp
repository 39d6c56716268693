#pragma once

#include <functional>

namespace dengfan {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int levels = 0;
};

/// Adaptive Gauss-Kronrod (31-point) on a finite interval [a, b].
/// Throws ConvergenceError, with the reached error estimate in the message,
/// when the estimate stays above rel_tol * |value| after the refinement cap.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol = 1e-10);

/// Tanh-sinh rule for integrands with integrable endpoint singularities
/// (e.g. s^p with -1 < p < 0 at s = 0). Never samples the endpoints.
QuadratureResult integrate_endpoint_singular(const std::function<double(double)>& f, double a, double b,
                                             double rel_tol = 1e-10);

} // namespace dengfan
