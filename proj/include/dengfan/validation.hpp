#pragma once

#include "dengfan/units.hpp"

#include <string>
#include <vector>

namespace dengfan {

enum class ValidationScope { fast, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;      ///< measured deviation (or count)
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationOptions {
    ValidationScope scope = ValidationScope::fast;
    PhysicalConstants constants;
    std::vector<MoleculeParams> molecules = default_molecules();
};

/// Runs the library's invariant checks against the compiled-in reference table.
/// `fast` solves the numerical oracle only for l = 0; `full` adds every l > 0 state,
/// the Morse-oracle comparison and the harmonic-oscillator certification.
std::vector<CheckResult> run_validation(const ValidationOptions& options);

/// {"scope": ..., "passed": N, "failed": M, "checks": [{name, passed, value, tolerance, detail}]}
std::string validation_report_json(const std::vector<CheckResult>& results, ValidationScope scope);
std::string validation_report_text(const std::vector<CheckResult>& results);

} // namespace dengfan
