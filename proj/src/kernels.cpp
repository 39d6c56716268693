#include "dengfan/kernels.hpp"

#include "dengfan/errors.hpp"
#include "dengfan/morse_model.hpp"
#include "dengfan/reference_table.hpp"
#include "dengfan/sdf_model.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dengfan {

namespace {

struct Job {
    const MoleculeParams* molecule = nullptr;
    std::size_t db_index = 0;
    int n = 0;
    int l = 0;
};

std::vector<Job> plan(const std::vector<LevelRequest>& requests, const std::vector<MoleculeParams>& db) {
    std::vector<Job> jobs;
    jobs.reserve(requests.size());
    for (const auto& req : requests) {
        const auto it = std::find_if(db.begin(), db.end(), [&](const auto& m) { return m.name == req.molecule; });
        if (it == db.end()) throw std::invalid_argument("unknown molecule '" + req.molecule + "'");
        jobs.push_back({&*it, static_cast<std::size_t>(it - db.begin()), req.n, req.l});
    }
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        return std::tie(a.db_index, a.n, a.l) < std::tie(b.db_index, b.n, b.l);
    });
    return jobs;
}

EnergyTableRow evaluate(const Job& job, const TabulateOptions& options) {
    EnergyTableRow row;
    row.molecule = job.molecule->name;
    row.n = job.n;
    row.l = job.l;
    const SdfSystem sys = SdfSystem::from_molecule(*job.molecule, options.constants);

    if (options.nu) {
        try {
            row.e_nu = energy_nl(job.n, job.l, sys.potential, sys.kappa, sys.d0);
        } catch (const UnboundStateError& e) {
            row.status = RowStatus::unbound;
            row.note = e.what();
        }
    }
    if (options.oracle) {
        try {
            const ShootingResult r = solve_bound_state(sdf_radial_problem(sys, job.l), job.n, options.shooting);
            row.e_oracle = r.energy;
            if (!r.converged) {
                row.status = RowStatus::not_converged;
                row.note = "oracle node count " + std::to_string(r.node_count) + " != n";
            }
        } catch (const BracketError& e) {
            if (row.status == RowStatus::ok) row.status = RowStatus::unbound;
            row.note = e.what();
        } catch (const ConvergenceError& e) {
            row.status = RowStatus::not_converged;
            row.note = e.what();
        }
    }
    if (options.morse) {
        if (job.l == 0) {
            const MorsePotential morse = MorsePotential::from_molecule(*job.molecule, options.constants);
            try {
                row.e_morse_ref = morse_energy_l0(job.n, morse, sys.kappa);
            } catch (const UnboundStateError&) {
            }
        } else if (auto ref = find_reference(job.molecule->name, job.n, job.l)) {
            row.e_morse_ref = ref->e_morse;
        }
    }
    return row;
}

} // namespace

std::optional<double> EnergyTableRow::nu_minus_oracle() const {
    if (e_nu && e_oracle) return *e_nu - *e_oracle;
    return std::nullopt;
}

std::vector<EnergyTableRow> tabulate_levels_serial(const std::vector<LevelRequest>& requests,
                                                   const std::vector<MoleculeParams>& db,
                                                   const TabulateOptions& options) {
    const auto jobs = plan(requests, db);
    std::vector<EnergyTableRow> rows;
    rows.reserve(jobs.size());
    for (const auto& job : jobs) rows.push_back(evaluate(job, options));
    return rows;
}

std::vector<EnergyTableRow> tabulate_levels_parallel(const std::vector<LevelRequest>& requests,
                                                     const std::vector<MoleculeParams>& db,
                                                     const TabulateOptions& options) {
    const auto jobs = plan(requests, db);
    std::vector<EnergyTableRow> rows(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    const auto count = static_cast<std::ptrdiff_t>(jobs.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            rows[i] = evaluate(jobs[i], options);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

namespace {

struct CurveSetup {
    SdfPotential sdf;
    MorsePotential morse;
    double kappa = 0.0;
    double r_min = 0.0;
    double step = 0.0;
};

CurveSetup curve_setup(const MoleculeParams& m, double r_min, double r_max, int points,
                       const PhysicalConstants& constants) {
    if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("curves: require 0 < r_min < r_max");
    if (points < 2) throw DomainError("curves: need at least 2 points");
    const SdfSystem sys = SdfSystem::from_molecule(m, constants);
    return {sys.potential, MorsePotential::from_molecule(m, constants), sys.kappa, r_min,
            (r_max - r_min) / (points - 1)};
}

CurveSample curve_point(const CurveSetup& s, int i, int points, double r_max, const std::vector<int>& l_list) {
    CurveSample c;
    c.r = (i == points - 1) ? r_max : s.r_min + i * s.step;
    c.v_sdf = v_sdf(c.r, s.sdf);
    c.v_morse = v_morse(c.r, s.morse);
    c.v_eff.reserve(l_list.size());
    for (int l : l_list) c.v_eff.push_back(c.v_sdf + s.kappa * static_cast<double>(l) * (l + 1) / (c.r * c.r));
    return c;
}

} // namespace

std::vector<CurveSample> sample_curves_serial(const MoleculeParams& m, double r_min, double r_max, int points,
                                              const std::vector<int>& l_list, const PhysicalConstants& constants) {
    const CurveSetup s = curve_setup(m, r_min, r_max, points, constants);
    std::vector<CurveSample> out;
    out.reserve(points);
    for (int i = 0; i < points; ++i) out.push_back(curve_point(s, i, points, r_max, l_list));
    return out;
}

std::vector<CurveSample> sample_curves_parallel(const MoleculeParams& m, double r_min, double r_max, int points,
                                                const std::vector<int>& l_list,
                                                const PhysicalConstants& constants) {
    const CurveSetup s = curve_setup(m, r_min, r_max, points, constants);
    std::vector<CurveSample> out(points);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < points; ++i) out[i] = curve_point(s, i, points, r_max, l_list);
    return out;
}

std::vector<double> sample_wavefunction_serial(const MoleculeParams& m, int n, int l, const std::vector<double>& r,
                                               const PhysicalConstants& constants) {
    const SdfSystem sys = SdfSystem::from_molecule(m, constants);
    std::vector<double> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = radial_wavefunction(n, l, sys.potential, sys.kappa, r[i]);
    return out;
}

std::vector<double> sample_wavefunction_parallel(const MoleculeParams& m, int n, int l,
                                                 const std::vector<double>& r,
                                                 const PhysicalConstants& constants) {
    const SdfSystem sys = SdfSystem::from_molecule(m, constants);
    // Validate once so that no exception escapes the parallel region.
    bound_state(n, l, sys);
    for (double x : r) {
        if (!(x > 0.0)) throw DomainError("radial_wavefunction: r must be positive");
    }
    std::vector<double> out(r.size());
    const auto count = static_cast<std::ptrdiff_t>(r.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = radial_wavefunction(n, l, sys.potential, sys.kappa, r[i]);
    return out;
}

int kernel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace dengfan
