#include "dengfan/nu_engine.hpp"

#include "dengfan/errors.hpp"
#include "dengfan/special_functions.hpp"

#include <cmath>
#include <sstream>

namespace dengfan {

NUConstants derive_constants(const NUCoefficients& c) {
    if (c.c3 == 0.0) throw UnsupportedBranchError("derive_constants: only the c3 != 0 branch is supported");

    NUConstants k;
    k.c4 = 0.5 * (1.0 - c.c1);
    k.c5 = 0.5 * (c.c2 - 2.0 * c.c3);
    k.c6 = k.c5 * k.c5 + c.A;
    k.c7 = 2.0 * k.c4 * k.c5 - c.B;
    k.c8 = k.c4 * k.c4 + c.C;
    k.c9 = c.c3 * (k.c7 + c.c3 * k.c8) + k.c6;
    if (k.c8 < 0.0) throw DomainError("derive_constants: c8 is negative");
    if (k.c9 < 0.0) throw DomainError("derive_constants: c9 is negative");

    const double sqrt_c8 = std::sqrt(k.c8);
    const double sqrt_c9 = std::sqrt(k.c9);
    k.c10 = c.c1 + 2.0 * k.c4 + 2.0 * sqrt_c8 - 1.0;
    k.c11 = 1.0 - c.c1 - 2.0 * k.c4 + (2.0 / c.c3) * sqrt_c9;
    k.c12 = k.c4 + sqrt_c8;
    k.c13 = -k.c4 + (sqrt_c9 - k.c5) / c.c3;
    return k;
}

double quantization_residual(int n, const NUCoefficients& c) {
    if (n < 0) throw DomainError("quantization_residual: n must be non-negative");
    const NUConstants k = derive_constants(c);
    const double sqrt_c8 = std::sqrt(k.c8);
    const double sqrt_c9 = std::sqrt(k.c9);
    const double m = 2.0 * n + 1.0;
    return c.c2 * n - m * k.c5 + m * (sqrt_c9 + c.c3 * sqrt_c8) + n * (n - 1.0) * c.c3 + k.c7
           + 2.0 * c.c3 * k.c8 + 2.0 * std::sqrt(k.c8 * k.c9);
}

double solve_energy_by_root(int n, const CoefficientMapping& mapping, std::pair<double, double> bracket,
                            const RootSolveOptions& options) {
    auto [lo, hi] = bracket;
    if (!(lo < hi)) throw BracketError("solve_energy_by_root: empty bracket");

    auto residual = [&](double eps) {
        const double r = quantization_residual(n, mapping(eps));
        if (!std::isfinite(r)) throw DomainError("solve_energy_by_root: non-finite residual");
        return r;
    };

    double f_lo = residual(lo);
    const double f_hi = residual(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        std::ostringstream msg;
        msg << "solve_energy_by_root: residual has no sign change on [" << lo << ", " << hi << "]";
        throw BracketError(msg.str());
    }

    const double scale = std::max(std::abs(lo), std::abs(hi));
    for (int it = 0; it < options.max_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double f_mid = residual(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if (it + 1 >= options.min_iterations && (hi - lo) < options.rel_width * scale) break;
    }
    return 0.5 * (lo + hi);
}

WavefunctionForm wavefunction_form(const NUCoefficients& c, int n) {
    if (n < 0) throw DomainError("wavefunction_form: n must be non-negative");
    const NUConstants k = derive_constants(c);
    if (!(k.c12 > 0.0)) throw UnboundStateError("wavefunction_form: c12 <= 0, state is not normalizable");
    if (!(k.c13 > 0.0)) throw UnboundStateError("wavefunction_form: c13 <= 0, state is not normalizable");
    return {k.c12, k.c13, k.c10, k.c11};
}

double evaluate_nu_wavefunction(const WavefunctionForm& form, double c3, int n, double s) {
    const double envelope = std::pow(s, form.exp_s) * std::pow(1.0 - c3 * s, form.exp_1ms);
    return envelope * jacobi_poly({n, form.jacobi_a, form.jacobi_b}, 1.0 - 2.0 * c3 * s);
}

} // namespace dengfan
