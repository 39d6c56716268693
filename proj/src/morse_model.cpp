#include "dengfan/morse_model.hpp"

#include "dengfan/errors.hpp"

#include <cmath>
#include <string>

namespace dengfan {

MorsePotential MorsePotential::make(double D, double alpha, double r_e) {
    if (!(D > 0.0) || !(alpha > 0.0) || !(r_e > 0.0)) {
        throw DomainError("MorsePotential: D, alpha and r_e must be positive");
    }
    return {D, alpha, r_e};
}

MorsePotential MorsePotential::from_molecule(const MoleculeParams& m, const PhysicalConstants& constants) {
    validate_molecule(m, constants);
    return make(dissociation_ev(m, constants), m.alpha, m.r_e);
}

double v_morse(double r, const MorsePotential& p) {
    const double t = -std::expm1(-p.alpha * (r - p.r_e));
    return p.D * t * t;
}

int morse_level_count(const MorsePotential& p, double kappa) {
    const double limit = std::sqrt(p.D / (kappa * p.alpha * p.alpha));
    int count = static_cast<int>(std::ceil(limit - 0.5));
    if (count < 0) count = 0;
    while (count > 0 && !(count - 1 + 0.5 < limit)) --count;
    return count;
}

double morse_energy_l0(int n, const MorsePotential& p, double kappa) {
    if (n < 0) throw DomainError("morse_energy_l0: n must be non-negative");
    if (n >= morse_level_count(p, kappa)) {
        throw UnboundStateError("morse_energy_l0: n=" + std::to_string(n) + " lies beyond the last Morse level");
    }
    const double hbar_omega = 2.0 * p.alpha * std::sqrt(kappa * p.D);
    const double v = n + 0.5;
    return -p.D + hbar_omega * v - kappa * p.alpha * p.alpha * v * v;
}

} // namespace dengfan
