#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dengfan {

/// One reference row. Energies are signed (negative for bound states);
/// the fixture file stores them as -E, the way they are printed.
struct ReferenceLevel {
    std::string molecule;
    int n = 0;
    int l = 0;
    double e_nu = 0.0;
    double e_ap = 0.0;
    double e_morse = 0.0;
};

/// Parses the fixture CSV: '#' comment lines, a header
/// `molecule,n,l,nu,ap,morse`, then one row per state. Throws ParseError.
std::vector<ReferenceLevel> parse_reference_table(std::string_view csv);

/// The 36-row table compiled into the library from data/table3_reference.csv.
const std::vector<ReferenceLevel>& reference_table();

/// Raw text of the compiled-in fixture.
std::string_view reference_table_csv();

std::optional<ReferenceLevel> find_reference(std::string_view molecule, int n, int l);

} // namespace dengfan
