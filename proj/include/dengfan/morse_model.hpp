#pragma once

#include "dengfan/units.hpp"

namespace dengfan {

/// V(r) = D [1 - e^{-alpha (r - r_e)}]^2; zero at r_e, D at dissociation.
struct MorsePotential {
    double D = 0.0;      ///< eV
    double alpha = 0.0;  ///< 1/Angstrom
    double r_e = 0.0;    ///< Angstrom

    static MorsePotential make(double D, double alpha, double r_e);
    static MorsePotential from_molecule(const MoleculeParams& m, const PhysicalConstants& constants = {});
};

double v_morse(double r, const MorsePotential& p);

/// Number of s-wave levels: count of n with n + 1/2 < sqrt(D / (kappa alpha^2)).
int morse_level_count(const MorsePotential& p, double kappa);

/// s-wave Morse level measured from dissociation:
///   E_n = -D + hbar_omega (n + 1/2) - kappa alpha^2 (n + 1/2)^2,  hbar_omega = 2 alpha sqrt(kappa D).
/// Throws UnboundStateError beyond the last level.
double morse_energy_l0(int n, const MorsePotential& p, double kappa);

} // namespace dengfan
