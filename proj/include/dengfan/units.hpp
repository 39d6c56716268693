#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dengfan {

/// Constants used for every eV/Angstrom conversion in the library.
struct PhysicalConstants {
    double hbar_c = 1973.29;        ///< eV * Angstrom
    double amu_c2 = 931.494028e6;   ///< eV
    double d0 = 1.0 / 12.0;         ///< centrifugal-approximation offset, dimensionless
    /// eV per 1/cm (hc in eV*cm, PDG 2010). Reproduces the reference level table at l = 0;
    /// hbar_c_wavenumber() gives the alternative 2*pi*hbar_c*1e-8.
    double ev_per_cm1 = 1.239841930e-4;

    /// Same constants with the wavenumber factor derived from hbar_c.
    PhysicalConstants hbar_c_wavenumber() const;

    /// Throws DomainError unless every field is positive and d0 lies in [0, 1).
    void validate() const;
};

/// One diatomic molecule record (database row).
struct MoleculeParams {
    std::string name;
    double mu = 0.0;           ///< reduced mass, amu
    double alpha = 0.0;        ///< range parameter, 1/Angstrom
    double r_e = 0.0;          ///< equilibrium distance, Angstrom
    double D_wavenumber = 0.0; ///< dissociation energy, 1/cm
    std::optional<double> D_ev_override;  ///< eV; takes precedence over the converted wavenumber

    bool operator==(const MoleculeParams&) const = default;
};

/// wavenumber [1/cm] -> energy [eV] via constants.ev_per_cm1.
double cm1_to_ev(double wavenumber, const PhysicalConstants& constants = {});

/// hbar^2 / (2 mu) in eV * Angstrom^2 for mu in amu.
double kappa(double mu_amu, const PhysicalConstants& constants = {});

/// Dissociation energy in eV: the override when present, otherwise the converted wavenumber.
double dissociation_ev(const MoleculeParams& m, const PhysicalConstants& constants = {});

/// Throws ParseError naming the first field that violates the record invariants.
void validate_molecule(const MoleculeParams& m, const PhysicalConstants& constants = {});

/// H2, LiH, CO and HCl, with the H2 record carrying D_ev = 4.74441001.
const std::vector<MoleculeParams>& default_molecules();

/// Reads a JSON array of records with keys name, mu_amu, alpha_per_angstrom,
/// re_angstrom, D_cm1 and optional D_ev. An empty (or whitespace-only) file
/// yields an empty list.
std::vector<MoleculeParams> load_molecules(const std::string& path);
std::vector<MoleculeParams> parse_molecules(std::string_view text);

/// Inverse of parse_molecules; doubles are written with full round-trip precision.
std::string serialize_molecules(const std::vector<MoleculeParams>& molecules);

/// Case-sensitive lookup; returns nullptr when absent.
const MoleculeParams* find_molecule(const std::vector<MoleculeParams>& db, std::string_view name);

} // namespace dengfan
