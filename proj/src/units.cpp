#include "dengfan/units.hpp"

#include "dengfan/errors.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dengfan {

using nlohmann::json;

void PhysicalConstants::validate() const {
    if (!(hbar_c > 0.0)) throw DomainError("hbar_c must be positive");
    if (!(amu_c2 > 0.0)) throw DomainError("amu_c2 must be positive");
    if (!(d0 >= 0.0 && d0 < 1.0)) throw DomainError("d0 must lie in [0, 1)");
    if (!(ev_per_cm1 > 0.0)) throw DomainError("ev_per_cm1 must be positive");
}

PhysicalConstants PhysicalConstants::hbar_c_wavenumber() const {
    PhysicalConstants c = *this;
    c.ev_per_cm1 = 2.0 * std::numbers::pi * hbar_c * 1e-8;
    return c;
}

double cm1_to_ev(double wavenumber, const PhysicalConstants& constants) {
    if (!(wavenumber >= 0.0)) throw DomainError("cm1_to_ev: wavenumber must be non-negative");
    return wavenumber * constants.ev_per_cm1;
}

double kappa(double mu_amu, const PhysicalConstants& constants) {
    if (!(mu_amu > 0.0)) throw DomainError("kappa: reduced mass must be positive");
    return constants.hbar_c * constants.hbar_c / (2.0 * mu_amu * constants.amu_c2);
}

double dissociation_ev(const MoleculeParams& m, const PhysicalConstants& constants) {
    return m.D_ev_override ? *m.D_ev_override : cm1_to_ev(m.D_wavenumber, constants);
}

void validate_molecule(const MoleculeParams& m, const PhysicalConstants& constants) {
    auto require = [&](bool ok, const char* field) {
        if (!ok) {
            throw ParseError(field, "molecule '" + m.name + "': field '" + field + "' violates its invariant");
        }
    };
    require(!m.name.empty(), "name");
    require(m.mu > 0.0 && std::isfinite(m.mu), "mu_amu");
    require(m.alpha > 0.0 && std::isfinite(m.alpha), "alpha_per_angstrom");
    require(m.r_e > 0.0 && std::isfinite(m.r_e), "re_angstrom");
    require(m.D_wavenumber > 0.0 && std::isfinite(m.D_wavenumber), "D_cm1");
    if (m.D_ev_override) {
        const double converted = cm1_to_ev(m.D_wavenumber, constants);
        require(std::abs(*m.D_ev_override - converted) <= 1e-3 * converted, "D_ev");
    }
}

const std::vector<MoleculeParams>& default_molecules() {
    static const std::vector<MoleculeParams> db = {
        {"H2", 0.50391, 1.9426, 0.7416, 38266.0, 4.74441001},
        {"LiH", 0.8801221, 1.1280, 1.5956, 20287.0, std::nullopt},
        {"CO", 6.8606719, 2.2994, 1.1283, 90540.0, std::nullopt},
        {"HCl", 0.9801045, 1.8677, 1.2746, 37255.0, std::nullopt},
    };
    return db;
}

namespace {

double number_field(const json& rec, const char* key) {
    auto it = rec.find(key);
    if (it == rec.end()) throw ParseError(key, std::string("missing field '") + key + "'");
    if (!it->is_number()) throw ParseError(key, std::string("field '") + key + "' is not a number");
    return it->get<double>();
}

} // namespace

std::vector<MoleculeParams> parse_molecules(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("<document>", std::string("malformed molecule database: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("<document>", "molecule database must be a JSON array");

    std::vector<MoleculeParams> out;
    out.reserve(doc.size());
    for (const auto& rec : doc) {
        if (!rec.is_object()) throw ParseError("<record>", "molecule record must be an object");
        MoleculeParams m;
        auto name = rec.find("name");
        if (name == rec.end() || !name->is_string()) throw ParseError("name", "missing or non-string field 'name'");
        m.name = name->get<std::string>();
        m.mu = number_field(rec, "mu_amu");
        m.alpha = number_field(rec, "alpha_per_angstrom");
        m.r_e = number_field(rec, "re_angstrom");
        m.D_wavenumber = number_field(rec, "D_cm1");
        if (rec.contains("D_ev")) m.D_ev_override = number_field(rec, "D_ev");
        validate_molecule(m);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<MoleculeParams> load_molecules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("<file>", "cannot open molecule database '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_molecules(ss.str());
}

std::string serialize_molecules(const std::vector<MoleculeParams>& molecules) {
    json doc = json::array();
    for (const auto& m : molecules) {
        json rec = {
            {"name", m.name},
            {"mu_amu", m.mu},
            {"alpha_per_angstrom", m.alpha},
            {"re_angstrom", m.r_e},
            {"D_cm1", m.D_wavenumber},
        };
        if (m.D_ev_override) rec["D_ev"] = *m.D_ev_override;
        doc.push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

const MoleculeParams* find_molecule(const std::vector<MoleculeParams>& db, std::string_view name) {
    for (const auto& m : db) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

} // namespace dengfan
