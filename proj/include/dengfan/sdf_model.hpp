#pragma once

#include "dengfan/nu_engine.hpp"
#include "dengfan/units.hpp"

namespace dengfan {

/// Shifted Deng-Fan potential V(r) = D [b^2/(e^{a r}-1)^2 - 2b/(e^{a r}-1)], b = e^{a r_e} - 1.
struct SdfPotential {
    double D = 0.0;      ///< eV
    double alpha = 0.0;  ///< 1/Angstrom
    double r_e = 0.0;    ///< Angstrom
    double b = 0.0;

    /// Validates D, alpha, r_e > 0 and fills in b.
    static SdfPotential make(double D, double alpha, double r_e);
};

/// A molecule ready for the closed-form solution: potential, hbar^2/2mu and the
/// centrifugal-approximation constant d0.
struct SdfSystem {
    SdfPotential potential;
    double kappa = 0.0;  ///< eV * Angstrom^2
    double d0 = 1.0 / 12.0;

    static SdfSystem from_molecule(const MoleculeParams& m, const PhysicalConstants& constants = {});
};

/// eps = E / kappa and d = D / kappa, both in 1/Angstrom^2.
struct ReducedQuantities {
    double epsilon = 0.0;
    double d = 0.0;
};

struct BoundState {
    int n = 0;
    int l = 0;
    double energy = 0.0;   ///< eV
    double eta = 0.0;
    double delta_l = 0.0;
    double norm = 0.0;     ///< Angstrom^{-1/2}
};

double b_param(double alpha, double r_e);

double v_sdf(double r, const SdfPotential& p);

/// Unshifted Deng-Fan potential, v_sdf + D.
double v_df(double r, const SdfPotential& p);

/// alpha^2 (d0 + 1/(e^{a r}-1) + 1/(e^{a r}-1)^2), the exponential stand-in for 1/r^2.
double pekeris_centrifugal(double r, double alpha, double d0);

ReducedQuantities reduced_quantities(double energy, const SdfSystem& sys);

/// NU coefficients of the transformed radial equation (s = e^{-alpha r}) at trial eps.
NUCoefficients map_to_nu(double epsilon, double d, double b, int l, double d0, double alpha);

/// Coefficient mapping for one (l) of a system, usable with solve_energy_by_root.
CoefficientMapping sdf_mapping(const SdfSystem& sys, int l);

/// Bracket (in eps) that contains every bound eigenvalue of the mapped equation.
std::pair<double, double> sdf_epsilon_bracket(const SdfSystem& sys, int l);

double delta_l(int l, const SdfPotential& p, double kappa);

/// eta > 0 exactly when (n, l) is bound.
double eta(int n, int l, const SdfPotential& p, double kappa);

/// Closed-form E_nl = kappa l(l+1) alpha^2 d0 - kappa alpha^2 eta^2.
/// Throws UnboundStateError when eta <= 0.
double energy_nl(int n, int l, const SdfPotential& p, double kappa, double d0);

/// Largest n with eta > 0 for this l, or -1 when no state is bound.
int max_n(int l, const SdfPotential& p, double kappa);

/// Closed-form normalization constant, assembled in log space.
double norm_constant(int n, int l, const SdfPotential& p, double kappa);

/// Ground-state form N_0l = sqrt(alpha (eta + delta) / (delta B(2 eta, 2 delta))).
double norm_constant_ground(int l, const SdfPotential& p, double kappa);

BoundState bound_state(int n, int l, const SdfSystem& sys);

/// R_nl(r) = N e^{-eta a r} (1 - e^{-a r})^delta P_n^{(2 eta, 2 delta - 1)}(1 - 2 e^{-a r}).
double radial_wavefunction(int n, int l, const SdfPotential& p, double kappa, double r);

/// Same function through (2 eta + 1)_n / n! 2F1(-n, n + 2 eta + 2 delta; 1 + 2 eta; e^{-a r}).
double radial_wavefunction_hypergeometric(int n, int l, const SdfPotential& p, double kappa, double r);

/// Sign changes of R_nl on `points` equally spaced radii in (0, max(20/alpha, 6 r_e)].
int radial_wavefunction_nodes(int n, int l, const SdfPotential& p, double kappa, int points = 20000);

/// Integral of |R_nl|^2 over (0, inf), computed in s = e^{-alpha r} on (0, 1).
double normalization_integral(int n, int l, const SdfPotential& p, double kappa, double rel_tol = 1e-10);

struct Eq29Check {
    double lhs = 0.0;  ///< quadrature
    double rhs = 0.0;  ///< closed-form Gamma ratio
    double rel_diff() const;
};

/// Checks the closed-form value of
///   int_0^1 s^{2a-1} (1-s)^{2(b+1)} [2F1(-n, n+2(a+b+1); 2a+1; s)]^2 ds.
/// The integral converges only for a > 0 and b > -3/2; a <= 0 throws DomainError.
Eq29Check verify_eq29(double a, double b, int n);

} // namespace dengfan
