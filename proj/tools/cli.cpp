#include "cli.hpp"

#include "dengfan/errors.hpp"
#include "dengfan/kernels.hpp"
#include "dengfan/reference_table.hpp"
#include "dengfan/sdf_model.hpp"
#include "dengfan/units.hpp"
#include "dengfan/validation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace dengfan::cli {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

constexpr const char* kVersionLine = "# dengfan 0.1.0";

struct Common {
    std::string config;
    std::optional<double> d0;
    std::string out;
    std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats = {"text", "csv"}) {
    cmd->add_option("--config", c.config, "Molecule database (JSON) replacing the built-in one");
    cmd->add_option("--d0", c.d0, "Centrifugal-approximation constant in [0, 1)");
    cmd->add_option("--out", c.out, "Write to this file instead of standard output");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(formats)))->capture_default_str();
}

/// A table with '#' metadata lines before the header and optional '#' summary lines after the rows.
struct Table {
    std::vector<std::string> meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> summary;

    std::string render(const std::string& format) const {
        std::ostringstream os;
        for (const auto& m : meta) os << m << '\n';
        if (format == "csv") {
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
                os << '\n';
            };
            line(header);
            for (const auto& r : rows) line(r);
        } else {
            std::vector<std::size_t> width(header.size());
            for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
            }
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    if (i) os << "  ";
                    os << std::string(width[i] - cells[i].size(), ' ') << cells[i];
                }
                os << '\n';
            };
            line(header);
            for (const auto& r : rows) {
                std::vector<std::string> shown = r;
                for (auto& c : shown) {
                    if (c.empty()) c = "-";
                }
                line(shown);
            }
        }
        for (const auto& s : summary) os << s << '\n';
        return os.str();
    }
};

struct Context {
    std::vector<MoleculeParams> db;
    PhysicalConstants constants;
};

/// Thrown for bad user input; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Context make_context(const Common& c) {
    Context ctx;
    try {
        ctx.db = c.config.empty() ? default_molecules() : load_molecules(c.config);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    if (c.d0) ctx.constants.d0 = *c.d0;
    try {
        ctx.constants.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return ctx;
}

const MoleculeParams& require_molecule(const Context& ctx, const std::string& name) {
    if (const auto* m = find_molecule(ctx.db, name)) return *m;
    std::string known;
    for (const auto& m : ctx.db) known += (known.empty() ? "" : ", ") + m.name;
    throw UsageError("unknown molecule '" + name + "'; known molecules: " + (known.empty() ? "(none)" : known));
}

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

const char* status_name(RowStatus s) {
    switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::unbound: return "unbound";
    case RowStatus::not_converged: return "not_converged";
    }
    return "?";
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + c.out + "'");
    f << text;
    if (!f.flush()) throw UsageError("cannot write '" + c.out + "'");
}

std::string d0_line(const PhysicalConstants& k) { return "# d0 = " + format_number(k.d0); }

// ---------------------------------------------------------------- levels

struct LevelsArgs {
    Common common;
    std::string molecule;
    std::vector<int> n{0};
    std::vector<int> l{0};
    std::vector<std::string> methods{"nu"};
};

int cmd_levels(const LevelsArgs& a, std::ostream& out) {
    const Context ctx = make_context(a.common);
    require_molecule(ctx, a.molecule);

    auto has = [&](const char* m) { return std::find(a.methods.begin(), a.methods.end(), m) != a.methods.end(); };
    TabulateOptions opt;
    opt.constants = ctx.constants;
    opt.nu = has("nu");
    opt.oracle = has("oracle");
    opt.morse = has("morse");

    std::vector<LevelRequest> requests;
    std::vector<int> ns = a.n;
    std::vector<int> ls = a.l;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    for (int n : ns) {
        for (int l : ls) requests.push_back({a.molecule, n, l});
    }
    const auto rows = tabulate_levels_parallel(requests, ctx.db, opt);

    Table t;
    t.meta = {kVersionLine, "# energies E_nl in eV, signed (bound states are negative)", d0_line(ctx.constants)};
    if (opt.morse) t.meta.push_back("# e_morse: s-wave Morse formula at l = 0, reference table value for l > 0");
    t.header = {"molecule", "n", "l"};
    if (opt.nu) t.header.push_back("e_nu");
    if (opt.oracle) t.header.push_back("e_oracle");
    if (opt.nu && opt.oracle) t.header.push_back("nu_minus_oracle");
    if (opt.morse) t.header.push_back("e_morse");
    t.header.push_back("status");

    bool not_converged = false;
    for (const auto& r : rows) {
        std::vector<std::string> cells = {r.molecule, std::to_string(r.n), std::to_string(r.l)};
        if (opt.nu) cells.push_back(cell(r.e_nu));
        if (opt.oracle) cells.push_back(cell(r.e_oracle));
        if (opt.nu && opt.oracle) cells.push_back(cell(r.nu_minus_oracle()));
        if (opt.morse) cells.push_back(cell(r.e_morse_ref));
        cells.push_back(status_name(r.status));
        not_converged = not_converged || r.status == RowStatus::not_converged;
        t.rows.push_back(std::move(cells));
    }
    emit(a.common, t.render(a.common.format), out);
    return not_converged ? exit_not_converged : exit_ok;
}

// ---------------------------------------------------------------- table3

int cmd_table3(const Common& c, std::ostream& out, std::ostream& err) {
    const Context ctx = make_context(c);
    TabulateOptions opt;
    opt.constants = ctx.constants;
    opt.oracle = true;
    opt.morse = true;

    std::vector<LevelRequest> requests;
    for (const auto& ref : reference_table()) {
        require_molecule(ctx, ref.molecule);
        requests.push_back({ref.molecule, ref.n, ref.l});
    }
    const auto rows = tabulate_levels_parallel(requests, ctx.db, opt);

    Table t;
    t.meta = {kVersionLine,
              "# energies printed as -E_nl in eV (positive = bound), the convention of the reference table",
              "# dev_* = computed - reference, both as -E",
              "# oracle: Numerov shooting with the exact centrifugal term; morse: s-wave formula at l = 0, "
              "reference value for l > 0",
              d0_line(ctx.constants)};
    t.header = {"molecule", "n", "l", "nu", "ref_nu", "dev_nu", "oracle", "ref_ap", "dev_ap",
                "morse", "ref_morse", "dev_morse", "status"};

    double max_nu = 0.0, max_ap = 0.0, max_morse = 0.0;
    bool not_converged = false;
    auto neg = [](const std::optional<double>& v) { return v ? std::optional<double>(-*v) : std::nullopt; };
    auto dev = [](const std::optional<double>& computed, double ref, double& worst) -> std::optional<double> {
        if (!computed) return std::nullopt;
        const double d = -*computed - ref;
        worst = std::max(worst, std::abs(d));
        return d;
    };
    for (const auto& r : rows) {
        const auto ref = *find_reference(r.molecule, r.n, r.l);
        t.rows.push_back({r.molecule, std::to_string(r.n), std::to_string(r.l),
                          cell(neg(r.e_nu)), format_number(-ref.e_nu), cell(dev(r.e_nu, -ref.e_nu, max_nu)),
                          cell(neg(r.e_oracle)), format_number(-ref.e_ap), cell(dev(r.e_oracle, -ref.e_ap, max_ap)),
                          cell(neg(r.e_morse_ref)), format_number(-ref.e_morse),
                          cell(dev(r.e_morse_ref, -ref.e_morse, max_morse)), status_name(r.status)});
        not_converged = not_converged || r.status != RowStatus::ok;
    }
    t.summary = {"# max |dev_nu| = " + format_number(max_nu), "# max |dev_ap| = " + format_number(max_ap),
                 "# max |dev_morse| = " + format_number(max_morse)};
    emit(c, t.render(c.format), out);
    if (!c.out.empty()) {
        for (const auto& s : t.summary) err << s.substr(2) << '\n';
    }
    return not_converged ? exit_not_converged : exit_ok;
}

// ---------------------------------------------------------------- curves

struct CurvesArgs {
    Common common;
    std::string molecule;
    double r_min = 0.2;
    double r_max = 5.0;
    int points = 500;
    std::vector<int> l{0, 5, 10};
};

int cmd_curves(const CurvesArgs& a, std::ostream& out) {
    const Context ctx = make_context(a.common);
    const MoleculeParams& m = require_molecule(ctx, a.molecule);
    if (!(a.r_min > 0.0 && a.r_max > a.r_min)) throw UsageError("curves: require 0 < --r-min < --r-max");
    if (a.points < 2) throw UsageError("curves: --points must be at least 2");

    const auto samples = sample_curves_parallel(m, a.r_min, a.r_max, a.points, a.l, ctx.constants);
    const double k = kappa(m.mu, ctx.constants);

    Table t;
    t.meta = {kVersionLine, "# molecule " + m.name + ", r in Angstrom, potentials in eV",
              "# v_morse = D (1 - exp(-alpha (r - r_e)))^2; v_sdf is shifted so that its minimum is -D",
              "# v_eff_l<L> = v_sdf + kappa L(L+1)/r^2 with kappa = hbar^2/2mu = " + format_number(k) +
                  " eV Angstrom^2"};
    t.header = {"r", "v_sdf", "v_morse"};
    for (int l : a.l) t.header.push_back("v_eff_l" + std::to_string(l));
    for (const auto& s : samples) {
        std::vector<std::string> cells = {format_number(s.r), format_number(s.v_sdf), format_number(s.v_morse)};
        for (double v : s.v_eff) cells.push_back(format_number(v));
        t.rows.push_back(std::move(cells));
    }
    emit(a.common, t.render(a.common.format), out);
    return exit_ok;
}

// ---------------------------------------------------------------- wavefunction

struct WavefunctionArgs {
    Common common;
    std::string molecule;
    int n = 0;
    int l = 0;
    double r_min = 0.01;
    std::optional<double> r_max;
    int points = 1000;
};

int cmd_wavefunction(const WavefunctionArgs& a, std::ostream& out) {
    const Context ctx = make_context(a.common);
    const MoleculeParams& m = require_molecule(ctx, a.molecule);
    const double r_max = a.r_max.value_or(std::max(20.0 / m.alpha, 6.0 * m.r_e));
    if (!(a.r_min > 0.0 && r_max > a.r_min)) throw UsageError("wavefunction: require 0 < --r-min < --r-max");
    if (a.points < 2) throw UsageError("wavefunction: --points must be at least 2");

    const SdfSystem sys = SdfSystem::from_molecule(m, ctx.constants);
    BoundState state;
    try {
        state = bound_state(a.n, a.l, sys);
    } catch (const UnboundStateError& e) {
        throw UsageError(e.what());
    }

    std::vector<double> r(a.points);
    const double step = (r_max - a.r_min) / (a.points - 1);
    for (int i = 0; i < a.points; ++i) r[i] = i == a.points - 1 ? r_max : a.r_min + i * step;
    const auto psi = sample_wavefunction_parallel(m, a.n, a.l, r, ctx.constants);

    Table t;
    t.meta = {kVersionLine,
              "# molecule " + m.name + " n = " + std::to_string(a.n) + " l = " + std::to_string(a.l) +
                  ", E = " + format_number(state.energy) + " eV",
              "# eta = " + format_number(state.eta) + ", delta = " + format_number(state.delta_l) +
                  ", N = " + format_number(state.norm) + " Angstrom^-1/2",
              d0_line(ctx.constants)};
    t.header = {"r", "R", "R2"};
    for (std::size_t i = 0; i < r.size(); ++i) {
        t.rows.push_back({format_number(r[i]), format_number(psi[i]), format_number(psi[i] * psi[i])});
    }
    emit(a.common, t.render(a.common.format), out);
    return exit_ok;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
    Common common;
    std::string scope = "fast";
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
    const Context ctx = make_context(a.common);
    ValidationOptions opt;
    opt.scope = a.scope == "full" ? ValidationScope::full : ValidationScope::fast;
    opt.constants = ctx.constants;
    opt.molecules = ctx.db;
    const auto results = run_validation(opt);

    std::string text;
    if (a.common.format == "json") {
        text = validation_report_json(results, opt.scope);
    } else if (a.common.format == "csv") {
        Table t;
        t.meta = {kVersionLine, "# scope " + a.scope};
        t.header = {"name", "passed", "value", "tolerance"};
        for (const auto& r : results) {
            t.rows.push_back({r.name, r.passed ? "1" : "0", std::isfinite(r.value) ? format_number(r.value) : "",
                              format_number(r.tolerance)});
        }
        text = t.render("csv");
    } else {
        text = validation_report_text(results);
    }
    emit(a.common, text, out);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    return ok ? exit_ok : exit_validation_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound-state spectra of the shifted Deng-Fan potential", "dengfan"};
    app.require_subcommand(1);

    LevelsArgs levels;
    auto* c_levels = app.add_subcommand("levels", "Energy levels of one molecule");
    add_common(c_levels, levels.common);
    c_levels->add_option("--molecule", levels.molecule, "Molecule name")->required();
    c_levels->add_option("--n", levels.n, "Vibrational quantum numbers, comma separated")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    c_levels->add_option("--l", levels.l, "Rotational quantum numbers, comma separated")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    c_levels->add_option("--methods", levels.methods, "Any of nu, oracle, morse")
        ->delimiter(',')
        ->check(CLI::IsMember({"nu", "oracle", "morse"}));

    Common table3;
    auto* c_table3 = app.add_subcommand("table3", "Reference-table reproduction with per-cell deviations");
    add_common(c_table3, table3);

    CurvesArgs curves;
    auto* c_curves = app.add_subcommand("curves", "Potential curves on a uniform radial grid");
    add_common(c_curves, curves.common);
    c_curves->add_option("--molecule", curves.molecule, "Molecule name")->required();
    c_curves->add_option("--r-min", curves.r_min, "Smallest radius, Angstrom")->capture_default_str();
    c_curves->add_option("--r-max", curves.r_max, "Largest radius, Angstrom")->capture_default_str();
    c_curves->add_option("--points", curves.points, "Number of radii")->capture_default_str();
    c_curves->add_option("--l", curves.l, "Angular momenta for v_eff columns")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);

    WavefunctionArgs wave;
    auto* c_wave = app.add_subcommand("wavefunction", "Closed-form radial wavefunction R_nl(r)");
    add_common(c_wave, wave.common);
    c_wave->add_option("--molecule", wave.molecule, "Molecule name")->required();
    c_wave->add_option("--n", wave.n, "Vibrational quantum number")->check(CLI::NonNegativeNumber);
    c_wave->add_option("--l", wave.l, "Rotational quantum number")->check(CLI::NonNegativeNumber);
    c_wave->add_option("--r-min", wave.r_min, "Smallest radius, Angstrom")->capture_default_str();
    c_wave->add_option("--r-max", wave.r_max, "Largest radius, Angstrom (default max(20/alpha, 6 r_e))");
    c_wave->add_option("--points", wave.points, "Number of radii")->capture_default_str();

    ValidateArgs validate;
    validate.common.format = "json";
    auto* c_validate = app.add_subcommand("validate", "Run the invariant checks; exit 1 on any failure");
    add_common(c_validate, validate.common, {"json", "text", "csv"});
    c_validate->add_option("--scope", validate.scope, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (c_levels->parsed()) return cmd_levels(levels, out);
        if (c_table3->parsed()) return cmd_table3(table3, out, err);
        if (c_curves->parsed()) return cmd_curves(curves, out);
        if (c_wave->parsed()) return cmd_wavefunction(wave, out);
        if (c_validate->parsed()) return cmd_validate(validate, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_not_converged;
    }
    return exit_usage;
}

} // namespace dengfan::cli
