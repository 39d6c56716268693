#pragma once

// Data-parallel drivers over independent states and grid points. Every kernel has a
// serial reference (`*_serial`) and an OpenMP version (`*_parallel`) that must produce
// bit-identical output; the serial form is kept for tests and the benchmark.

#include "dengfan/numeric_oracle.hpp"
#include "dengfan/units.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dengfan {

enum class RowStatus { ok, unbound, not_converged };

/// A (molecule, n, l) row of the energy table. Energies are signed, in eV.
struct EnergyTableRow {
    std::string molecule;
    int n = 0;
    int l = 0;
    std::optional<double> e_nu;
    std::optional<double> e_oracle;
    std::optional<double> e_morse_ref;  ///< analytic at l = 0, reference table otherwise
    RowStatus status = RowStatus::ok;
    std::string note;

    /// e_nu - e_oracle when both are present.
    std::optional<double> nu_minus_oracle() const;
};

struct LevelRequest {
    std::string molecule;
    int n = 0;
    int l = 0;
};

struct TabulateOptions {
    PhysicalConstants constants;
    bool nu = true;
    bool oracle = false;
    bool morse = false;
    ShootingOptions shooting;
};

/// Rows are returned sorted by (database order of molecule, n, l).
/// Unknown molecules throw std::invalid_argument before any work starts.
std::vector<EnergyTableRow> tabulate_levels_serial(const std::vector<LevelRequest>& requests,
                                                   const std::vector<MoleculeParams>& db,
                                                   const TabulateOptions& options);
std::vector<EnergyTableRow> tabulate_levels_parallel(const std::vector<LevelRequest>& requests,
                                                     const std::vector<MoleculeParams>& db,
                                                     const TabulateOptions& options);

/// Potential curves at one radius. v_eff[k] = v_sdf + kappa l_k(l_k+1)/r^2 with the exact centrifugal term.
struct CurveSample {
    double r = 0.0;
    double v_sdf = 0.0;
    double v_morse = 0.0;
    std::vector<double> v_eff;
};

/// `points` equally spaced radii on [r_min, r_max]; throws DomainError on a bad range.
std::vector<CurveSample> sample_curves_serial(const MoleculeParams& m, double r_min, double r_max, int points,
                                              const std::vector<int>& l_list, const PhysicalConstants& constants);
std::vector<CurveSample> sample_curves_parallel(const MoleculeParams& m, double r_min, double r_max, int points,
                                                const std::vector<int>& l_list,
                                                const PhysicalConstants& constants);

/// Closed-form R_nl on equally spaced radii.
std::vector<double> sample_wavefunction_serial(const MoleculeParams& m, int n, int l, const std::vector<double>& r,
                                               const PhysicalConstants& constants);
std::vector<double> sample_wavefunction_parallel(const MoleculeParams& m, int n, int l,
                                                 const std::vector<double>& r,
                                                 const PhysicalConstants& constants);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int kernel_threads();

} // namespace dengfan
