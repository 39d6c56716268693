#pragma once

#include <functional>
#include <utility>

namespace dengfan {

/// Coefficients of the parametric hypergeometric-type equation
///   psi'' + (c1 - c2 s) / (s (1 - c3 s)) psi' + (-A s^2 + B s - C) / (s^2 (1 - c3 s)^2) psi = 0.
struct NUCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
};

/// Derived constants c4 ... c13 of the parametric Nikiforov-Uvarov method.
struct NUConstants {
    double c4 = 0.0;
    double c5 = 0.0;
    double c6 = 0.0;
    double c7 = 0.0;
    double c8 = 0.0;
    double c9 = 0.0;
    double c10 = 0.0;
    double c11 = 0.0;
    double c12 = 0.0;
    double c13 = 0.0;
};

/// Shape of psi(s) = N s^{exp_s} (1 - c3 s)^{exp_1ms} P_n^{(jacobi_a, jacobi_b)}(1 - 2 c3 s).
struct WavefunctionForm {
    double exp_s = 0.0;     ///< c12
    double exp_1ms = 0.0;   ///< c13
    double jacobi_a = 0.0;  ///< c10
    double jacobi_b = 0.0;  ///< c11
};

/// Throws UnsupportedBranchError for c3 == 0 and DomainError when c8 or c9 is negative.
NUConstants derive_constants(const NUCoefficients& c);

/// Left-hand side of the NU energy equation; zero exactly at an eigenvalue.
double quantization_residual(int n, const NUCoefficients& c);

/// Maps a trial reduced energy to the coefficients of the equation it produces.
using CoefficientMapping = std::function<NUCoefficients(double)>;

struct RootSolveOptions {
    int min_iterations = 60;
    int max_iterations = 2000;
    double rel_width = 1e-14;
};

/// Bisection on quantization_residual(n, mapping(eps)) over [lo, hi].
/// Throws BracketError when the residual has no sign change (including lo == hi).
double solve_energy_by_root(int n, const CoefficientMapping& mapping, std::pair<double, double> bracket,
                            const RootSolveOptions& options = {});

/// Exponents and Jacobi parameters of the n-th solution.
/// Throws UnboundStateError when c12 <= 0 or c13 <= 0.
WavefunctionForm wavefunction_form(const NUCoefficients& c, int n);

/// Unnormalized psi(s) for the given form, with s in (0, 1/c3).
double evaluate_nu_wavefunction(const WavefunctionForm& form, double c3, int n, double s);

} // namespace dengfan
