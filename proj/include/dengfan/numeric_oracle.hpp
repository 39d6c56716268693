#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dengfan {

struct SdfSystem;
struct MorsePotential;

/// Uniform grid r_i = r_min + i * step, i = 0 .. size-1.
struct RadialGrid {
    double r_min = 0.0;
    double step = 0.0;
    std::size_t size = 0;

    double r(std::size_t i) const { return r_min + static_cast<double>(i) * step; }
    double r_max() const { return r(size - 1); }
};

/// -kappa R'' + [V(r) + kappa l(l+1)/r^2] R = E R on [r_min, r_max] with the exact centrifugal term.
struct RadialProblem {
    std::function<double(double)> potential;  ///< eV
    int l = 0;
    double kappa = 0.0;   ///< eV * Angstrom^2
    double r_min = 1e-4;  ///< Angstrom
    double r_max = 0.0;   ///< Angstrom
    double step = 0.0;    ///< Angstrom

    /// Throws DomainError unless 0 < r_min < r_max, step > 0 and the grid has at least 1e4 intervals.
    void validate() const;
    RadialGrid grid() const;
};

struct ShootingOptions {
    double node_bracket_width = 1e-6;  ///< eV, switch from node bisection to matching refinement
    double energy_tolerance = 1e-12;   ///< eV, final bracket width
    int max_iterations = 400;
};

struct ShootingResult {
    double energy = 0.0;  ///< eV
    int node_count = 0;
    RadialGrid grid;
    std::vector<double> wavefunction;  ///< normalized R(r_i)
    bool converged = false;
    int iterations = 0;
    double truncation_estimate = 0.0;  ///< from normalize_quadrature
};

struct NormalizationResult {
    double integral = 0.0;
    bool truncated = false;            ///< samples at an end exceed 1e-12 of the peak
    double truncation_estimate = 0.0;  ///< estimated mass outside the grid
};

/// Default integration domain for a diatomic well: r_min = 1e-4, r_max = max(20/alpha, 6 r_e),
/// and a step fine enough that step^2 * depth / kappa <= 1e-4, with at least 2e4 points.
RadialProblem make_radial_problem(std::function<double(double)> potential, int l, double kappa, double alpha,
                                  double r_e, double depth);

/// Shifted Deng-Fan potential of a system with the exact centrifugal term.
RadialProblem sdf_radial_problem(const SdfSystem& sys, int l);

/// Morse potential shifted so that dissociation is the energy zero.
RadialProblem morse_radial_problem(const MorsePotential& p, double kappa, int l);

/// Sign changes of the outward-integrated regular solution at energy E.
int count_nodes(const RadialProblem& problem, double energy);

/// Bound state with n_target nodes. Throws BracketError when no such state exists below the
/// effective potential at r_max, and ConvergenceError when the iteration cap is hit.
ShootingResult solve_bound_state(const RadialProblem& problem, int n_target, const ShootingOptions& options = {});

/// Composite Simpson rule for the integral of |R|^2 over the grid.
NormalizationResult normalize_quadrature(std::span<const double> samples, const RadialGrid& grid);

} // namespace dengfan
