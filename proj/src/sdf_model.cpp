#include "dengfan/sdf_model.hpp"

#include "dengfan/errors.hpp"
#include "dengfan/quadrature.hpp"
#include "dengfan/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dengfan {

namespace {

void require_positive_r(double r, const char* op) {
    if (!(r > 0.0)) throw DomainError(std::string(op) + ": r must be positive");
}

void require_quantum_numbers(int n, int l, const char* op) {
    if (n < 0 || l < 0) throw DomainError(std::string(op) + ": quantum numbers must be non-negative");
}

std::string state_label(int n, int l) {
    return "(n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")";
}

// D b(2+b) / (kappa alpha^2): the squared upper bound on n + delta_l for bound states.
double binding_strength(const SdfPotential& p, double kappa) {
    return p.D * p.b * (2.0 + p.b) / (kappa * p.alpha * p.alpha);
}

double bound_eta(int n, int l, const SdfPotential& p, double kappa, const char* op) {
    const double e = eta(n, l, p, kappa);
    if (!(e > 0.0)) throw UnboundStateError(std::string(op) + ": state " + state_label(n, l) + " is unbound");
    return e;
}

double log_norm_constant(int n, double eta_v, double delta, double alpha) {
    const double log_n2 = std::log(2.0 * eta_v * alpha) + log_gamma(n + 1.0) + std::log(n + eta_v + delta)
                          + log_gamma(n + 2.0 * (eta_v + delta)) - std::log(n + delta)
                          - log_gamma(n + 2.0 * eta_v + 1.0) - log_gamma(n + 2.0 * delta);
    return 0.5 * log_n2;
}

} // namespace

SdfPotential SdfPotential::make(double D, double alpha, double r_e) {
    if (!(D > 0.0)) throw DomainError("SdfPotential: D must be positive");
    return {D, alpha, r_e, b_param(alpha, r_e)};
}

SdfSystem SdfSystem::from_molecule(const MoleculeParams& m, const PhysicalConstants& constants) {
    constants.validate();
    validate_molecule(m, constants);
    return {SdfPotential::make(dissociation_ev(m, constants), m.alpha, m.r_e), dengfan::kappa(m.mu, constants), constants.d0};
}

double b_param(double alpha, double r_e) {
    if (!(alpha > 0.0)) throw DomainError("b_param: alpha must be positive");
    if (!(r_e > 0.0)) throw DomainError("b_param: r_e must be positive");
    return std::expm1(alpha * r_e);
}

double v_sdf(double r, const SdfPotential& p) {
    require_positive_r(r, "v_sdf");
    const double ratio = p.b / std::expm1(p.alpha * r);
    return p.D * ratio * (ratio - 2.0);
}

double v_df(double r, const SdfPotential& p) {
    require_positive_r(r, "v_df");
    const double t = 1.0 - p.b / std::expm1(p.alpha * r);
    return p.D * t * t;
}

double pekeris_centrifugal(double r, double alpha, double d0) {
    require_positive_r(r, "pekeris_centrifugal");
    if (!(alpha > 0.0)) throw DomainError("pekeris_centrifugal: alpha must be positive");
    const double inv = 1.0 / std::expm1(alpha * r);
    return alpha * alpha * (d0 + inv + inv * inv);
}

ReducedQuantities reduced_quantities(double energy, const SdfSystem& sys) {
    return {energy / sys.kappa, sys.potential.D / sys.kappa};
}

NUCoefficients map_to_nu(double epsilon, double d, double b, int l, double d0, double alpha) {
    const double a2 = alpha * alpha;
    const double ll = static_cast<double>(l) * (l + 1);
    NUCoefficients c;
    c.c1 = 1.0;
    c.c2 = 1.0;
    c.c3 = 1.0;
    c.A = (d * b * (2.0 + b) - epsilon) / a2 + ll * d0;
    c.B = 2.0 * (d * b - epsilon) / a2 + ll * (2.0 * d0 - 1.0);
    c.C = -epsilon / a2 + ll * d0;
    return c;
}

CoefficientMapping sdf_mapping(const SdfSystem& sys, int l) {
    const double d = sys.potential.D / sys.kappa;
    return [d, l, b = sys.potential.b, d0 = sys.d0, alpha = sys.potential.alpha](double eps) {
        return map_to_nu(eps, d, b, l, d0, alpha);
    };
}

std::pair<double, double> sdf_epsilon_bracket(const SdfSystem& sys, int l) {
    const auto& p = sys.potential;
    const double d = p.D / sys.kappa;
    // Upper end: C = 0. Lower end: C = d (1+b)^2 / alpha^2 + l(l+1) d0, which exceeds any admissible c12^2.
    double hi = static_cast<double>(l) * (l + 1) * sys.d0 * p.alpha * p.alpha;
    while (map_to_nu(hi, d, p.b, l, sys.d0, p.alpha).C < 0.0) hi = std::nextafter(hi, -INFINITY);
    const double lo = -d * (1.0 + p.b) * (1.0 + p.b);
    return {lo, hi};
}

double delta_l(int l, const SdfPotential& p, double kappa) {
    if (l < 0) throw DomainError("delta_l: l must be non-negative");
    const double two_l1 = 2.0 * l + 1.0;
    const double radicand = two_l1 * two_l1 + 4.0 * p.D * p.b * p.b / (kappa * p.alpha * p.alpha);
    return 0.5 * (1.0 + std::sqrt(radicand));
}

double eta(int n, int l, const SdfPotential& p, double kappa) {
    require_quantum_numbers(n, l, "eta");
    const double nd = n + delta_l(l, p, kappa);
    return 0.5 * binding_strength(p, kappa) / nd - 0.5 * nd;
}

double energy_nl(int n, int l, const SdfPotential& p, double kappa, double d0) {
    require_quantum_numbers(n, l, "energy_nl");
    const double e = bound_eta(n, l, p, kappa, "energy_nl");
    const double ka2 = kappa * p.alpha * p.alpha;
    return ka2 * static_cast<double>(l) * (l + 1) * d0 - ka2 * e * e;
}

int max_n(int l, const SdfPotential& p, double kappa) {
    // eta > 0  <=>  n + delta_l < sqrt(binding_strength)
    const double limit = std::sqrt(binding_strength(p, kappa)) - delta_l(l, p, kappa);
    int n = static_cast<int>(std::ceil(limit)) - 1;
    while (n >= 0 && !(eta(n, l, p, kappa) > 0.0)) --n;
    while (eta(n + 1, l, p, kappa) > 0.0) ++n;
    return n;
}

double norm_constant(int n, int l, const SdfPotential& p, double kappa) {
    require_quantum_numbers(n, l, "norm_constant");
    const double e = bound_eta(n, l, p, kappa, "norm_constant");
    return std::exp(log_norm_constant(n, e, delta_l(l, p, kappa), p.alpha));
}

double norm_constant_ground(int l, const SdfPotential& p, double kappa) {
    const double e = bound_eta(0, l, p, kappa, "norm_constant_ground");
    const double delta = delta_l(l, p, kappa);
    const double log_n2 = std::log(p.alpha * (e + delta) / delta) - log_beta(2.0 * e, 2.0 * delta);
    return std::exp(0.5 * log_n2);
}

BoundState bound_state(int n, int l, const SdfSystem& sys) {
    const auto& p = sys.potential;
    BoundState s;
    s.n = n;
    s.l = l;
    s.energy = energy_nl(n, l, p, sys.kappa, sys.d0);
    s.eta = eta(n, l, p, sys.kappa);
    s.delta_l = delta_l(l, p, sys.kappa);
    s.norm = norm_constant(n, l, p, sys.kappa);
    return s;
}

double radial_wavefunction(int n, int l, const SdfPotential& p, double kappa, double r) {
    require_positive_r(r, "radial_wavefunction");
    require_quantum_numbers(n, l, "radial_wavefunction");
    const double e = bound_eta(n, l, p, kappa, "radial_wavefunction");
    const double delta = delta_l(l, p, kappa);
    const double s = std::exp(-p.alpha * r);
    const double log_envelope = log_norm_constant(n, e, delta, p.alpha) - e * p.alpha * r
                                + delta * std::log(-std::expm1(-p.alpha * r));
    return std::exp(log_envelope) * jacobi_poly({n, 2.0 * e, 2.0 * delta - 1.0}, 1.0 - 2.0 * s);
}

double radial_wavefunction_hypergeometric(int n, int l, const SdfPotential& p, double kappa, double r) {
    require_positive_r(r, "radial_wavefunction_hypergeometric");
    require_quantum_numbers(n, l, "radial_wavefunction_hypergeometric");
    const double e = bound_eta(n, l, p, kappa, "radial_wavefunction_hypergeometric");
    const double delta = delta_l(l, p, kappa);
    const double s = std::exp(-p.alpha * r);
    const double log_prefactor = log_norm_constant(n, e, delta, p.alpha) + log_pochhammer(2.0 * e + 1.0, n)
                                 - log_gamma(n + 1.0);
    const double log_envelope = log_prefactor - e * p.alpha * r + delta * std::log(-std::expm1(-p.alpha * r));
    return std::exp(log_envelope) * hyp2f1_terminating(n, n + 2.0 * e + 2.0 * delta, 1.0 + 2.0 * e, s);
}

int radial_wavefunction_nodes(int n, int l, const SdfPotential& p, double kappa, int points) {
    if (points < 2) throw DomainError("radial_wavefunction_nodes: need at least 2 points");
    const double r_hi = std::max(20.0 / p.alpha, 6.0 * p.r_e);
    const double h = r_hi / points;
    int count = 0;
    int last = 0;
    for (int i = 1; i <= points; ++i) {
        const double v = radial_wavefunction(n, l, p, kappa, i * h);
        const int sg = (v > 0.0) - (v < 0.0);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

double normalization_integral(int n, int l, const SdfPotential& p, double kappa, double rel_tol) {
    require_quantum_numbers(n, l, "normalization_integral");
    const double e = bound_eta(n, l, p, kappa, "normalization_integral");
    const double delta = delta_l(l, p, kappa);
    const double log_n = log_norm_constant(n, e, delta, p.alpha);
    const JacobiParams jp{n, 2.0 * e, 2.0 * delta - 1.0};

    // |R(r)|^2 dr = N^2 s^{2 eta - 1} (1 - s)^{2 delta} P^2 ds / alpha
    auto integrand = [&](double s) {
        if (s <= 0.0 || s >= 1.0) return 0.0;
        const double log_w = 2.0 * log_n + (2.0 * e - 1.0) * std::log(s) + 2.0 * delta * std::log1p(-s)
                             - std::log(p.alpha);
        const double poly = jacobi_poly(jp, 1.0 - 2.0 * s);
        return std::exp(log_w) * poly * poly;
    };
    return integrate_adaptive(integrand, 0.0, 1.0, rel_tol).value;
}

double Eq29Check::rel_diff() const { return std::abs(lhs - rhs) / std::abs(rhs); }

Eq29Check verify_eq29(double a, double b, int n) {
    if (!(a > 0.0)) throw DomainError("verify_eq29: the integral diverges unless a > 0");
    if (!(b > -1.5)) throw DomainError("verify_eq29: b must exceed -3/2");
    if (n < 0 || n > 8) throw DomainError("verify_eq29: n must lie in [0, 8]");

    const double beta = n + 2.0 * (a + b + 1.0);
    const double gamma = 2.0 * a + 1.0;
    auto integrand = [&](double s) {
        const double f = hyp2f1_terminating(n, beta, gamma, s);
        return std::pow(s, 2.0 * a - 1.0) * std::pow(1.0 - s, 2.0 * (b + 1.0)) * f * f;
    };

    Eq29Check out;
    out.lhs = integrate_endpoint_singular(integrand, 0.0, 1.0, 1e-12).value;

    int sign = 1;
    int sg = 1;
    double log_rhs = 0.0;
    const double numer_lin = n + b + 1.0;
    const double denom_lin = n + a + b + 1.0;
    sign *= numer_lin < 0.0 ? -1 : 1;
    sign *= denom_lin < 0.0 ? -1 : 1;
    log_rhs += std::log(std::abs(numer_lin)) - std::log(std::abs(denom_lin));
    log_rhs += log_gamma(n + 1.0);
    log_rhs += log_abs_gamma(n + 2.0 * b + 2.0, &sg);
    sign *= sg;
    log_rhs += log_gamma(2.0 * a) + log_gamma(2.0 * a + 1.0);
    log_rhs -= log_gamma(n + 2.0 * a + 1.0);
    log_rhs -= log_abs_gamma(beta, &sg);
    sign *= sg;
    out.rhs = sign * std::exp(log_rhs);
    return out;
}

} // namespace dengfan
