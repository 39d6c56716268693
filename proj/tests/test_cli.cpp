#include <doctest.h>

#include "cli.hpp"
#include "dengfan/reference_table.hpp"
#include "dengfan/units.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace dengfan;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "dengfan");
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct Csv {
    std::vector<std::string> meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const {
        return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
    }
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cells.push_back(c);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

Csv parse(const std::string& text) {
    Csv csv;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            csv.meta.push_back(line);
        } else if (csv.header.empty()) {
            csv.header = split(line);
        } else {
            csv.rows.push_back(split(line));
            REQUIRE(csv.rows.back().size() == csv.header.size());
        }
    }
    return csv;
}

} // namespace

TEST_CASE("number format") {
    CHECK(cli::format_number(-4.394436937813) == "-4.39443693781");
    CHECK(cli::format_number(0.0) == "0");
    CHECK(cli::format_number(1e-20) == "1e-20");
    for (double v : {-1.14442389458123, 3.0e-7, 123456.789012345}) {
        const std::string s = cli::format_number(v);
        CHECK(cli::format_number(std::stod(s)) == s);
    }
}

TEST_CASE("levels") {
    const Run r = run({"levels", "--molecule", "H2", "--n", "0,5,7", "--l", "0,5,10", "--methods", "nu,oracle",
                       "--format", "csv"});
    REQUIRE(r.code == 0);
    const Csv csv = parse(r.out);
    REQUIRE(csv.rows.size() == 9);
    CHECK(csv.header == std::vector<std::string>{"molecule", "n", "l", "e_nu", "e_oracle", "nu_minus_oracle", "status"});
    for (const auto& row : csv.rows) {
        const auto ref = *find_reference(row[0], std::stoi(row[1]), std::stoi(row[2]));
        CHECK(std::abs(std::stod(row[3]) - ref.e_nu) < 1e-3);
        CHECK(std::abs(std::stod(row[4]) - ref.e_ap) < 1e-3);
        CHECK(row[6] == "ok");
    }
    CHECK(std::any_of(csv.meta.begin(), csv.meta.end(), [](auto& m) { return m.find("signed") != std::string::npos; }));

    const Csv lih = parse(run({"levels", "--molecule", "LiH", "--n", "7", "--l", "10", "--format", "csv"}).out);
    REQUIRE(lih.rows.size() == 1);
    CHECK(std::abs(std::stod(lih.rows[0][lih.col("e_nu")]) - -1.14444) < 1e-4);

    const Run text = run({"levels", "--molecule", "CO", "--n", "5", "--l", "10", "--methods", "nu,morse"});
    CHECK(text.code == 0);
    CHECK(text.out.find("-9.77009") != std::string::npos);
}

TEST_CASE("levels: unbound rows and usage errors") {
    const Run unbound = run({"levels", "--molecule", "H2", "--n", "40", "--l", "0", "--methods", "nu,oracle", "--format", "csv"});
    CHECK(unbound.code == 0);
    const Csv csv = parse(unbound.out);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.rows[0][csv.col("status")] == "unbound");
    CHECK(csv.rows[0][csv.col("e_nu")].empty());

    const Run unknown = run({"levels", "--molecule", "XX"});
    CHECK(unknown.code == 2);
    for (const auto& m : default_molecules()) CHECK(unknown.err.find(m.name) != std::string::npos);

    CHECK(run({"levels", "--molecule", "H2", "--methods", "wkb"}).code == 2);
    CHECK(run({"levels", "--molecule", "H2", "--n", "-1"}).code == 2);
    CHECK(run({"levels"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"levels", "--molecule", "H2", "--d0", "1.5"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table3") {
    const Run a = run({"table3", "--format", "csv"});
    REQUIRE(a.code == 0);
    const Run b = run({"table3", "--format", "csv"});
    CHECK(a.out == b.out);

    const Csv csv = parse(a.out);
    REQUIRE(csv.rows.size() == 36);
    CHECK(std::any_of(csv.meta.begin(), csv.meta.end(), [](auto& m) { return m.find("-E") != std::string::npos; }));
    for (const auto& row : csv.rows) {
        const auto ref = *find_reference(row[0], std::stoi(row[1]), std::stoi(row[2]));
        const double nu = std::stod(row[csv.col("nu")]);
        CHECK(nu > 0.0);
        CHECK(std::stod(row[csv.col("ref_nu")]) == -ref.e_nu);
        CHECK(std::stod(row[csv.col("dev_nu")]) == doctest::Approx(nu + ref.e_nu).epsilon(1e-9));
        CHECK(std::abs(std::stod(row[csv.col("dev_nu")])) < 1e-3);
        CHECK(std::abs(std::stod(row[csv.col("dev_ap")])) < 1e-3);
        CHECK(std::abs(std::stod(row[csv.col("dev_morse")])) < 2e-3);
        CHECK(row[csv.col("status")] == "ok");
    }
    // Rows sorted by (molecule in database order, n, l).
    CHECK(csv.rows.front()[0] == "H2");
    CHECK(csv.rows.back()[0] == "HCl");
    const auto summary = std::count_if(csv.meta.begin(), csv.meta.end(), [](auto& m) { return m.find("max |dev_") != std::string::npos; });
    CHECK(summary == 3);

    const auto path = (std::filesystem::temp_directory_path() / "dengfan_table3.csv").string();
    const Run file = run({"table3", "--format", "csv", "--out", path});
    CHECK(file.code == 0);
    CHECK(file.out.empty());
    CHECK(file.err.find("max |dev_nu|") != std::string::npos);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
    std::filesystem::remove(path);
}

TEST_CASE("curves") {
    const Run r = run({"curves", "--molecule", "H2", "--r-min", "0.2", "--r-max", "5", "--points", "500", "--l", "0,5,10",
                       "--format", "csv"});
    REQUIRE(r.code == 0);
    const Csv csv = parse(r.out);
    REQUIRE(csv.rows.size() == 500);
    CHECK(csv.header == std::vector<std::string>{"r", "v_sdf", "v_morse", "v_eff_l0", "v_eff_l5", "v_eff_l10"});
    const double D = 4.74441001;
    double prev_r = 0.0;
    for (const auto& row : csv.rows) {
        const double rr = std::stod(row[0]);
        CHECK(rr > prev_r);
        prev_r = rr;
        CHECK(std::stod(row[5]) > std::stod(row[4]));
        CHECK(std::stod(row[4]) > std::stod(row[1]));
        for (const auto& cell : row) CHECK(cli::format_number(std::stod(cell)) == cell);
    }
    CHECK(std::stod(csv.rows[0][0]) == 0.2);
    CHECK(std::stod(csv.rows[0][1]) > 10.0 * D);
    CHECK(std::stod(csv.rows[0][2]) < 11.0 * D);

    // A grid through r_e = 0.7416.
    const Csv mid = parse(run({"curves", "--molecule", "H2", "--r-min", "0.2416", "--r-max", "1.2416", "--points", "3",
                               "--format", "csv"}).out);
    REQUIRE(mid.rows.size() == 3);
    CHECK(std::abs(std::stod(mid.rows[1][1]) + D) < 1e-10);
    CHECK(std::abs(std::stod(mid.rows[1][2])) < 1e-10);

    CHECK(run({"curves", "--molecule", "H2", "--r-min", "3", "--r-max", "1"}).code == 2);
    CHECK(run({"curves", "--molecule", "H2", "--r-min", "0"}).code == 2);
    CHECK(run({"curves", "--molecule", "H2", "--points", "1"}).code == 2);
    CHECK(run({"curves", "--molecule", "N2"}).code == 2);
}

TEST_CASE("wavefunction") {
    const Run r = run({"wavefunction", "--molecule", "H2", "--n", "3", "--l", "0", "--r-max", "20", "--points", "4000",
                       "--format", "csv"});
    REQUIRE(r.code == 0);
    const Csv csv = parse(r.out);
    REQUIRE(csv.rows.size() == 4000);
    CHECK(csv.header == std::vector<std::string>{"r", "R", "R2"});
    int changes = 0;
    double prev = 0.0;
    for (const auto& row : csv.rows) {
        const double v = std::stod(row[1]);
        if (v != 0.0) {
            if (prev != 0.0 && (v > 0) != (prev > 0)) ++changes;
            prev = v;
        }
    }
    CHECK(changes == 3);
    CHECK(run({"wavefunction", "--molecule", "H2", "--n", "40"}).code == 2);
}

TEST_CASE("validate") {
    const Run fast = run({"validate"});
    CHECK(fast.code == 0);
    const auto doc = nlohmann::json::parse(fast.out);
    CHECK(doc["scope"] == "fast");
    CHECK(doc["failed"] == 0);

    const Run wrong = run({"validate", "--d0", "0.5", "--format", "csv"});
    CHECK(wrong.code == 1);
    const Csv csv = parse(wrong.out);
    for (const auto& row : csv.rows) {
        if (row[0].rfind("nu_table/", 0) == 0) {
            const bool l0 = row[0].substr(row[0].size() - 3) == "/l0";
            CHECK(row[1] == (l0 ? "1" : "0"));
        }
    }
    CHECK(run({"validate", "--scope", "medium"}).code == 2);
}

TEST_CASE("molecule database override") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "dengfan_cli_db.json").string();
    std::ofstream(path) << R"([{"name":"Toy","mu_amu":1.0,"alpha_per_angstrom":1.5,"re_angstrom":1.2,"D_cm1":30000}])";
    const Run r = run({"levels", "--config", path, "--molecule", "Toy", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(parse(r.out).rows.size() == 1);
    CHECK(run({"levels", "--config", path, "--molecule", "H2"}).code == 2);
    std::filesystem::remove(path);

    const auto bad = (dir / "dengfan_cli_bad.json").string();
    std::ofstream(bad) << R"([{"name":"Toy","mu_amu":1.0,"alpha_per_angstrom":-1,"re_angstrom":1.2,"D_cm1":30000}])";
    const Run e = run({"levels", "--config", bad, "--molecule", "Toy"});
    CHECK(e.code == 2);
    CHECK(e.err.find("alpha") != std::string::npos);
    std::filesystem::remove(bad);
    CHECK(run({"levels", "--config", "/nonexistent.json", "--molecule", "H2"}).code == 2);
}
