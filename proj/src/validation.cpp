#include "dengfan/validation.hpp"

#include "dengfan/errors.hpp"
#include "dengfan/kernels.hpp"
#include "dengfan/morse_model.hpp"
#include "dengfan/nu_engine.hpp"
#include "dengfan/numeric_oracle.hpp"
#include "dengfan/reference_table.hpp"
#include "dengfan/sdf_model.hpp"
#include "dengfan/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dengfan {

namespace {

std::string state_name(const std::string& prefix, const std::string& molecule, int n, int l) {
    return prefix + "/" + molecule + "/n" + std::to_string(n) + "/l" + std::to_string(l);
}

class Recorder {
public:
    void check(std::string name, double value, double tolerance, std::string detail = {}) {
        out_.push_back({std::move(name), std::isfinite(value) && value <= tolerance, value, tolerance, std::move(detail)});
    }
    void fail(std::string name, std::string detail) {
        out_.push_back({std::move(name), false, NAN, 0.0, std::move(detail)});
    }
    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::vector<CheckResult> out_;
};

void closed_form_checks(Recorder& rec, const MoleculeParams& m, const SdfSystem& sys, const ReferenceLevel& ref) {
    const auto& p = sys.potential;
    const double e_nu = energy_nl(ref.n, ref.l, p, sys.kappa, sys.d0);
    rec.check(state_name("nu_table", m.name, ref.n, ref.l), std::abs(e_nu - ref.e_nu), 1e-3);

    const double eps_root = solve_energy_by_root(ref.n, sdf_mapping(sys, ref.l), sdf_epsilon_bracket(sys, ref.l));
    const double e_root = eps_root * sys.kappa;
    rec.check(state_name("root_equivalence", m.name, ref.n, ref.l), std::abs(e_root - e_nu) / std::abs(e_nu), 1e-10);

    const NUConstants k = derive_constants(map_to_nu(e_nu / sys.kappa, p.D / sys.kappa, p.b, ref.l, sys.d0, p.alpha));
    const double eta_v = eta(ref.n, ref.l, p, sys.kappa);
    const double delta = delta_l(ref.l, p, sys.kappa);
    const double exp_dev = std::max(std::abs(k.c12 - eta_v) / eta_v, std::abs(k.c13 - delta) / delta);
    rec.check(state_name("exponent_identity", m.name, ref.n, ref.l), exp_dev, 1e-10);

    const double norm = normalization_integral(ref.n, ref.l, p, sys.kappa);
    rec.check(state_name("normalization", m.name, ref.n, ref.l), std::abs(norm - 1.0), 1e-6);

    const int nodes = radial_wavefunction_nodes(ref.n, ref.l, p, sys.kappa);
    rec.check(state_name("nodes", m.name, ref.n, ref.l), std::abs(nodes - ref.n), 0.0,
              "found " + std::to_string(nodes));
}

double harmonic_energy_error(int n) {
    // kappa = 1/2, V = r^2/2  =>  hbar omega = 1, E_n = 2n + 3/2 for l = 0.
    RadialProblem problem;
    problem.potential = [](double r) { return 0.5 * r * r; };
    problem.kappa = 0.5;
    problem.l = 0;
    problem.r_min = 1e-4;
    problem.r_max = 12.0;
    problem.step = (problem.r_max - problem.r_min) / 40000.0;
    const double exact = 2.0 * n + 1.5;
    return std::abs(solve_bound_state(problem, n).energy - exact) / exact;
}

} // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
    Recorder rec;
    const bool full = options.scope == ValidationScope::full;

    // Jacobi: recurrence against the hypergeometric route, relative to the sampled sup norm.
    {
        double worst = 0.0;
        for (double a : {-0.5, 0.3, 1.7, 4.0}) {
            for (double b : {-0.5, 0.3, 1.7, 4.0}) {
                for (int n = 0; n <= 10; ++n) {
                    double sup = 0.0;
                    double dev = 0.0;
                    for (int i = 0; i < 50; ++i) {
                        const double x = -1.0 + 2.0 * i / 49.0;
                        const double p1 = jacobi_poly({n, a, b}, x);
                        const double p2 = jacobi_poly_hypergeometric({n, a, b}, x);
                        sup = std::max(sup, std::abs(p1));
                        dev = std::max(dev, std::abs(p1 - p2));
                    }
                    worst = std::max(worst, dev / sup);
                }
            }
        }
        rec.check("jacobi_identity", worst, 1e-11);
    }

    {
        double worst = 0.0;
        for (double r : {0.5, 1.0, 2.0}) {
            worst = std::max(worst, std::abs(pekeris_centrifugal(r, 1e-6, 1.0 / 12.0) * r * r - 1.0));
        }
        rec.check("pekeris_limit", worst, 1e-8);

        const double alpha = 1e-4;
        const double r_e = 0.7416;
        const auto pot = SdfPotential::make(1.0, alpha, r_e);
        const double r = 2.0 * r_e;
        const double kratzer = std::pow((r - r_e) / r, 2);
        rec.check("kratzer_limit", std::abs(v_df(r, pot) - kratzer) / kratzer, 1e-3);
    }

    std::map<std::string, std::map<int, std::map<int, double>>> nu_oracle_gap;

    for (const auto& m : options.molecules) {
        const SdfSystem sys = SdfSystem::from_molecule(m, options.constants);
        const MorsePotential morse = MorsePotential::from_molecule(m, options.constants);

        {
            PhysicalConstants c0 = options.constants;
            bool identical = true;
            for (double d0 : {0.0, 1.0 / 12.0, 0.999}) {
                c0.d0 = d0;
                const SdfSystem s = SdfSystem::from_molecule(m, c0);
                for (int n : {0, 5, 7}) {
                    identical = identical && energy_nl(n, 0, s.potential, s.kappa, s.d0)
                                                 == energy_nl(n, 0, sys.potential, sys.kappa, 0.5);
                }
            }
            rec.check("d0_independence_l0/" + m.name, identical ? 0.0 : 1.0, 0.0);
        }

        for (const auto& ref : reference_table()) {
            if (ref.molecule != m.name) continue;
            try {
                closed_form_checks(rec, m, sys, ref);
            } catch (const std::exception& e) {
                rec.fail(state_name("closed_form", m.name, ref.n, ref.l), e.what());
                continue;
            }

            if (ref.l == 0) {
                const double formula = morse_energy_l0(ref.n, morse, sys.kappa);
                rec.check(state_name("morse_l0_reference", m.name, ref.n, 0), std::abs(formula - ref.e_morse), 2e-3);
                if (full) {
                    const auto r = solve_bound_state(morse_radial_problem(morse, sys.kappa, 0), ref.n);
                    rec.check(state_name("morse_oracle", m.name, ref.n, 0), std::abs(r.energy - formula), 1e-5);
                }
            }

            if (ref.l == 0 || full) {
                try {
                    const auto r = solve_bound_state(sdf_radial_problem(sys, ref.l), ref.n);
                    const double e_nu = energy_nl(ref.n, ref.l, sys.potential, sys.kappa, sys.d0);
                    const double ap_tol = ref.l == 0 ? 1e-4 : 1e-3;
                    rec.check(state_name("ap_table", m.name, ref.n, ref.l), std::abs(r.energy - ref.e_ap), ap_tol);
                    if (ref.l == 0) {
                        rec.check(state_name("oracle_l0", m.name, ref.n, 0), std::abs(r.energy - e_nu), 1e-5);
                    }
                    nu_oracle_gap[m.name][ref.n][ref.l] = std::abs(e_nu - r.energy);
                } catch (const std::exception& e) {
                    rec.fail(state_name("oracle", m.name, ref.n, ref.l), e.what());
                }
            }
        }
    }

    if (full) {
        for (const auto& [molecule, by_n] : nu_oracle_gap) {
            for (const auto& [n, by_l] : by_n) {
                bool monotone = true;
                double prev = -1.0;
                for (const auto& [l, gap] : by_l) {
                    monotone = monotone && gap >= prev;
                    prev = gap;
                }
                rec.check("discrepancy_ordering/" + molecule + "/n" + std::to_string(n), monotone ? 0.0 : 1.0, 0.0);
            }
        }
        for (int n = 0; n <= 5; ++n) {
            rec.check("harmonic_oscillator/n" + std::to_string(n), harmonic_energy_error(n), 1e-6);
        }
    }
    return rec.take();
}

std::string validation_report_json(const std::vector<CheckResult>& results, ValidationScope scope) {
    nlohmann::json checks = nlohmann::json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        nlohmann::json c = {{"name", r.name}, {"passed", r.passed}, {"tolerance", r.tolerance}};
        c["value"] = std::isfinite(r.value) ? nlohmann::json(r.value) : nlohmann::json(nullptr);
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(std::move(c));
    }
    nlohmann::json doc = {
        {"scope", scope == ValidationScope::full ? "full" : "fast"},
        {"passed", passed},
        {"failed", results.size() - passed},
        {"checks", std::move(checks)},
    };
    return doc.dump(2) + "\n";
}

std::string validation_report_text(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << "  value=" << r.value << "  tol=" << r.tolerance;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return out.str();
}

} // namespace dengfan
