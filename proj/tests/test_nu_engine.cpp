#include <doctest.h>

#include "dengfan/errors.hpp"
#include "dengfan/nu_engine.hpp"
#include "dengfan/sdf_model.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numeric>
#include <vector>
#include <random>

using namespace dengfan;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {

bool close(double a, double b, double tol = 1e-14) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

SdfSystem h2() { return SdfSystem::from_molecule(default_molecules()[0]); }

} // namespace

TEST_CASE("derived constants, trivial coefficients") {
    const NUConstants k = derive_constants({1, 1, 1, 0, 0, 0});
    CHECK(k.c4 == 0.0);
    CHECK(k.c5 == -0.5);
    CHECK(k.c6 == 0.25);
    CHECK(k.c7 == 0.0);
    CHECK(k.c8 == 0.0);
    CHECK(k.c9 == 0.25);
    CHECK(k.c13 == 1.0);
}

TEST_CASE("derived constants reproduce the c1 = c2 = c3 = 1 specialization") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 200.0);
    for (int i = 0; i < 1000; ++i) {
        const double A = u(rng), B = u(rng), C = u(rng);
        const double disc = 4.0 * (A - B + C) + 1.0;
        if (disc < 0.0) continue;
        const NUConstants k = derive_constants({1, 1, 1, A, B, C});
        CHECK(k.c4 == 0.0);
        CHECK(k.c5 == -0.5);
        CHECK(close(k.c6, A + 0.25));
        CHECK(close(k.c7, -B));
        CHECK(close(k.c8, C));
        CHECK(close(k.c9, disc / 4.0));
        CHECK(close(k.c10, 2.0 * std::sqrt(C)));  // general formula, not the printed table entry
        CHECK(close(k.c11, std::sqrt(disc)));
        CHECK(close(k.c12, std::sqrt(C)));
        CHECK(close(k.c13, 0.5 * (1.0 + std::sqrt(disc))));
    }
}

TEST_CASE("derived constants, general coefficients") {
    const NUCoefficients c{0.4, 1.3, 0.7, 2.0, 1.1, 0.9};
    const NUConstants k = derive_constants(c);
    const double c4 = 0.3, c5 = (1.3 - 1.4) / 2.0;
    const double c6 = c5 * c5 + 2.0, c7 = 2.0 * c4 * c5 - 1.1, c8 = c4 * c4 + 0.9;
    const double c9 = 0.7 * (c7 + 0.7 * c8) + c6;
    CHECK(close(k.c9, c9));
    CHECK(close(k.c10, 0.4 + 2.0 * c4 + 2.0 * std::sqrt(c8) - 1.0));
    CHECK(close(k.c11, 1.0 - 0.4 - 2.0 * c4 + 2.0 / 0.7 * std::sqrt(c9)));
    CHECK(close(k.c12, c4 + std::sqrt(c8)));
    CHECK(close(k.c13, -c4 + (std::sqrt(c9) - c5) / 0.7));

    CHECK_THROWS_AS(derive_constants({1, 1, 0, 1, 1, 1}), UnsupportedBranchError);
    CHECK_THROWS_AS(derive_constants({1, 1, 1, 0, 0, -1}), DomainError);
    CHECK_THROWS_AS(derive_constants({1, 1, 1, 0, 10, 0}), DomainError);
}

TEST_CASE("exponents at the H2 ground state") {
    const SdfSystem sys = h2();
    const auto& p = sys.potential;
    const double e = energy_nl(0, 0, p, sys.kappa, sys.d0);
    const NUConstants k = derive_constants(map_to_nu(e / sys.kappa, p.D / sys.kappa, p.b, 0, sys.d0, p.alpha));

    // 50-digit evaluation of delta_0 and eta(0, 0).
    const mp kap(sys.kappa), al(p.alpha), D(p.D), b(p.b);
    const mp delta = (1 + sqrt(1 + 4 * D * b * b / (kap * al * al))) / 2;
    const mp eta = D * b * (2 + b) / (2 * kap * al * al * delta) - delta / 2;
    CHECK(close(k.c13, delta.convert_to<double>(), 1e-12));
    CHECK(close(k.c12, eta.convert_to<double>(), 1e-10));
}

TEST_CASE("quantization residual") {
    CHECK(quantization_residual(0, {1, 1, 1, 0, 0, 0}) == 1.0);

    const SdfSystem sys = h2();
    const auto& p = sys.potential;
    const double eps = energy_nl(0, 0, p, sys.kappa, sys.d0) / sys.kappa;
    const auto map = sdf_mapping(sys, 0);
    CHECK(std::abs(quantization_residual(0, map(eps))) < 1e-8);

    const double lower = quantization_residual(0, map(1.1 * eps));
    const double upper = quantization_residual(0, map(0.9 * eps));
    CHECK(lower != 0.0);
    CHECK(upper != 0.0);
    CHECK(lower * upper < 0.0);
    // The residual decreases as eps rises toward zero.
    CHECK(lower > upper);
}

TEST_CASE("energy by root finding") {
    SUBCASE("H2 ground state with the bracket (-d, 0)") {
        const SdfSystem sys = h2();
        const auto& p = sys.potential;
        const double d = p.D / sys.kappa;
        const double eps = solve_energy_by_root(0, sdf_mapping(sys, 0), {-d, 0.0});
        const double closed = energy_nl(0, 0, p, sys.kappa, sys.d0) / sys.kappa;
        CHECK(std::abs(eps - closed) <= 1e-10 * std::abs(closed));
    }
    SUBCASE("CO n = 7, l = 10") {
        const SdfSystem sys = SdfSystem::from_molecule(default_molecules()[2]);
        const double eps = solve_energy_by_root(7, sdf_mapping(sys, 10), sdf_epsilon_bracket(sys, 10));
        const double closed = energy_nl(7, 10, sys.potential, sys.kappa, sys.d0) / sys.kappa;
        CHECK(std::abs(eps - closed) <= 1e-10 * std::abs(closed));
    }
    SUBCASE("bad brackets") {
        const SdfSystem sys = h2();
        CHECK_THROWS_AS(solve_energy_by_root(0, sdf_mapping(sys, 0), {-3.0, -3.0}), BracketError);
        CHECK_THROWS_AS(solve_energy_by_root(0, sdf_mapping(sys, 0), {-1.0, 0.0}), BracketError);
    }
}

TEST_CASE("c13 does not depend on the trial energy") {
    const SdfSystem sys = h2();
    for (int l : {0, 5, 10}) {
        const auto [lo, hi] = sdf_epsilon_bracket(sys, l);
        const auto map = sdf_mapping(sys, l);
        std::vector<double> c13(100);
        for (int i = 0; i < 100; ++i) c13[i] = derive_constants(map(lo + (hi - lo) * (i + 0.5) / 100.0)).c13;
        const double mean = std::accumulate(c13.begin(), c13.end(), 0.0) / 100.0;
        double var = 0.0;
        for (double v : c13) var += (v - mean) * (v - mean) / 100.0;
        CHECK(var < 1e-14);
        CHECK(std::abs(mean - delta_l(l, sys.potential, sys.kappa)) < 1e-10 * mean);
    }
}

TEST_CASE("wavefunction form") {
    const WavefunctionForm quarter = wavefunction_form({1, 1, 1, 0, 0, 0.25}, 0);
    CHECK(quarter.exp_s == 0.5);

    const SdfSystem sys = h2();
    const auto& p = sys.potential;
    for (int l : {0, 5}) {
        const double e = energy_nl(3, l, p, sys.kappa, sys.d0);
        const auto form = wavefunction_form(sdf_mapping(sys, l)(e / sys.kappa), 3);
        const double et = eta(3, l, p, sys.kappa), de = delta_l(l, p, sys.kappa);
        CHECK(close(form.exp_s, et, 1e-10));
        CHECK(close(form.exp_1ms, de, 1e-12));
        CHECK(close(form.jacobi_a, 2.0 * et, 1e-10));
        CHECK(close(form.jacobi_b, 2.0 * de - 1.0, 1e-12));
    }
    CHECK_THROWS_AS(wavefunction_form({1, 1, 1, 0, 0, 0}, 0), UnboundStateError);
}

TEST_CASE("assembled wavefunction solves the hypergeometric-type equation") {
    // A shallow well keeps the exponents moderate, so central differences resolve psi.
    SdfSystem sys;
    sys.potential = SdfPotential::make(0.5, 1.0, 1.0);
    sys.kappa = 0.05;
    for (int n : {0, 1, 2}) {
        const double eps = energy_nl(n, 0, sys.potential, sys.kappa, sys.d0) / sys.kappa;
        const NUCoefficients c = sdf_mapping(sys, 0)(eps);
        const WavefunctionForm form = wavefunction_form(c, n);
        auto psi = [&](double s) { return evaluate_nu_wavefunction(form, c.c3, n, s); };

        // Five-point central differences, O(h^4).
        const double h = 1e-4;
        double worst = 0.0, scale = 0.0;
        for (int i = 1; i <= 200; ++i) {
            const double s = i / 201.0;
            const double m2 = psi(s - 2 * h), m1 = psi(s - h), z = psi(s), p1 = psi(s + h), p2 = psi(s + 2 * h);
            const double d2 = (-p2 + 16.0 * p1 - 30.0 * z + 16.0 * m1 - m2) / (12.0 * h * h);
            const double d1 = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
            const double q = -c.A * s * s + c.B * s - c.C;
            const double res = s * s * (1 - c.c3 * s) * (1 - c.c3 * s) * d2 + s * (1 - c.c3 * s) * (c.c1 - c.c2 * s) * d1 +
                               q * psi(s);
            worst = std::max(worst, std::abs(res));
            scale = std::max(scale, std::abs(q * psi(s)));
        }
        CHECK(worst / scale < 1e-6);
    }
}
