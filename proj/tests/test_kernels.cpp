#include <doctest.h>

#include "dengfan/errors.hpp"
#include "dengfan/kernels.hpp"
#include "dengfan/morse_model.hpp"
#include "dengfan/reference_table.hpp"
#include "dengfan/sdf_model.hpp"

#include <cstring>
#include <stdexcept>

using namespace dengfan;

namespace {

bool same_bits(const std::optional<double>& a, const std::optional<double>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || std::memcmp(&*a, &*b, sizeof(double)) == 0;
}

bool same_row(const EnergyTableRow& a, const EnergyTableRow& b) {
    return a.molecule == b.molecule && a.n == b.n && a.l == b.l && same_bits(a.e_nu, b.e_nu) &&
           same_bits(a.e_oracle, b.e_oracle) && same_bits(a.e_morse_ref, b.e_morse_ref) && a.status == b.status &&
           a.note == b.note;
}

std::vector<LevelRequest> table_requests() {
    std::vector<LevelRequest> req;
    // Reverse order so that sorting is exercised.
    for (auto it = reference_table().rbegin(); it != reference_table().rend(); ++it) req.push_back({it->molecule, it->n, it->l});
    return req;
}

} // namespace

TEST_CASE("level tables: serial and parallel agree bit for bit") {
    TabulateOptions opt;
    opt.morse = true;
    const auto serial = tabulate_levels_serial(table_requests(), default_molecules(), opt);
    const auto parallel = tabulate_levels_parallel(table_requests(), default_molecules(), opt);
    REQUIRE(serial.size() == 36);
    REQUIRE(parallel.size() == 36);
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(same_row(serial[i], parallel[i]));

    // Sorted by database order, then n, then l.
    CHECK(serial.front().molecule == "H2");
    CHECK(serial.back().molecule == "HCl");
    for (std::size_t i = 1; i < serial.size(); ++i) {
        if (serial[i].molecule == serial[i - 1].molecule) {
            CHECK(std::tie(serial[i - 1].n, serial[i - 1].l) < std::tie(serial[i].n, serial[i].l));
        }
    }
    for (const auto& row : serial) {
        const auto ref = *find_reference(row.molecule, row.n, row.l);
        CHECK(std::abs(*row.e_nu - ref.e_nu) < 1e-3);
        REQUIRE(row.e_morse_ref);
        if (row.l == 0) {
            const auto& m = *find_molecule(default_molecules(), row.molecule);
            CHECK(*row.e_morse_ref == morse_energy_l0(row.n, MorsePotential::from_molecule(m), kappa(m.mu)));
        } else {
            CHECK(*row.e_morse_ref == ref.e_morse);
        }
        CHECK_FALSE(row.e_oracle);
        CHECK_FALSE(row.nu_minus_oracle());
    }
}

TEST_CASE("level tables with the oracle") {
    TabulateOptions opt;
    opt.oracle = true;
    const std::vector<LevelRequest> req = {{"CO", 7, 10}, {"H2", 5, 10}, {"H2", 0, 0}, {"LiH", 5, 5}};
    const auto serial = tabulate_levels_serial(req, default_molecules(), opt);
    const auto parallel = tabulate_levels_parallel(req, default_molecules(), opt);
    REQUIRE(serial.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(same_row(serial[i], parallel[i]));
    for (const auto& row : serial) {
        CHECK(row.status == RowStatus::ok);
        CHECK(*row.nu_minus_oracle() == *row.e_nu - *row.e_oracle);
        CHECK(std::abs(*row.e_oracle - find_reference(row.molecule, row.n, row.l)->e_ap) < 1e-3);
    }
}

TEST_CASE("unbound and unknown requests") {
    TabulateOptions opt;
    opt.oracle = true;
    const auto rows = tabulate_levels_parallel({{"H2", 40, 0}}, default_molecules(), opt);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == RowStatus::unbound);
    CHECK_FALSE(rows[0].e_nu);
    CHECK_FALSE(rows[0].e_oracle);
    CHECK_THROWS_AS(tabulate_levels_serial({{"XX", 0, 0}}, default_molecules(), opt), std::invalid_argument);
    CHECK_THROWS_AS(tabulate_levels_parallel({{"XX", 0, 0}}, default_molecules(), opt), std::invalid_argument);
}

TEST_CASE("potential curves") {
    const auto& h2 = default_molecules()[0];
    const std::vector<int> ls = {0, 5, 10};
    const auto serial = sample_curves_serial(h2, 0.2, 5.0, 500, ls, {});
    const auto parallel = sample_curves_parallel(h2, 0.2, 5.0, 500, ls, {});
    REQUIRE(serial.size() == 500);
    CHECK(serial.front().r == 0.2);
    CHECK(serial.back().r == 5.0);
    const double k = kappa(h2.mu);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        const auto& s = serial[i];
        CHECK(std::memcmp(&s.r, &parallel[i].r, sizeof(double)) == 0);
        CHECK(s.v_sdf == parallel[i].v_sdf);
        CHECK(s.v_morse == parallel[i].v_morse);
        CHECK(s.v_eff == parallel[i].v_eff);
        if (i > 0) CHECK(s.r > serial[i - 1].r);
        CHECK(s.v_eff[0] == s.v_sdf);
        CHECK(s.v_eff[2] > s.v_eff[1]);
        CHECK(s.v_eff[1] > s.v_sdf);
        CHECK(s.v_eff[2] == s.v_sdf + k * 110.0 / (s.r * s.r));
    }
    CHECK_THROWS_AS(sample_curves_serial(h2, 0.0, 5.0, 10, ls, {}), DomainError);
    CHECK_THROWS_AS(sample_curves_parallel(h2, 2.0, 1.0, 10, ls, {}), DomainError);
    CHECK_THROWS_AS(sample_curves_parallel(h2, 1.0, 2.0, 1, ls, {}), DomainError);
}

TEST_CASE("wavefunction samples") {
    const auto& co = default_molecules()[2];
    std::vector<double> r;
    for (int i = 1; i <= 3000; ++i) r.push_back(i * 1e-3);
    const auto serial = sample_wavefunction_serial(co, 5, 10, r, {});
    const auto parallel = sample_wavefunction_parallel(co, 5, 10, r, {});
    CHECK(serial == parallel);
    CHECK_THROWS_AS(sample_wavefunction_parallel(co, 5, 10, {0.0}, {}), DomainError);
    CHECK_THROWS_AS(sample_wavefunction_parallel(co, 500, 0, r, {}), UnboundStateError);
    CHECK(kernel_threads() >= 1);
}
