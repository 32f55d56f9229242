#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tpt/catalog.hpp"
#include "tpt/fidelity.hpp"
#include "test_util.hpp"

using namespace tpt;
using tpt::testing::check_close;
using tpt::testing::Rng;

namespace {

constexpr double pi = std::numbers::pi;

// relabel qubits q1 and q2 of a 3-qubit state
StateVector swap_qubits(const StateVector& s, int q1, int q2) {
    std::vector<Complex> out(s.amps.size());
    for (int i = 0; i < s.dim(); ++i) {
        int bits[3] = {qubit_bit(i, 0, 3), qubit_bit(i, 1, 3), qubit_bit(i, 2, 3)};
        std::swap(bits[q1], bits[q2]);
        const int j = (bits[0] << 2) | (bits[1] << 1) | bits[2];
        out[static_cast<std::size_t>(j)] = s.amps[static_cast<std::size_t>(i)];
    }
    return make_state(3, std::move(out));
}

StateVector flip_all(const StateVector& s) {
    StateVector out = s;
    for (int q = 0; q < 3; ++q) out = apply_single(pauli_ops::sigma_x, q, out);
    return out;
}

void check_equal_states(const StateVector& a, const StateVector& b) {
    REQUIRE(a.dim() == b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        check_close(a.amps[static_cast<std::size_t>(i)],
                    b.amps[static_cast<std::size_t>(i)], 1e-15);
    }
}

}  // namespace

TEST_SUITE_BEGIN("catalog");

TEST_CASE("every canonical state is normalized") {
    for (StateType t : kAllStateTypes) {
        CAPTURE(state_tag(t));
        const StateVector& s = canonical_state(t);
        CHECK(s.n_qubits == 3);
        CHECK(std::abs(norm2(s) - 1.0) < 1e-12);
        CHECK(s.normalized);
    }
}

TEST_CASE("canonical amplitudes sit on the listed basis terms") {
    const double rt2 = std::numbers::sqrt2;
    const StateVector& ghz = canonical_state(StateType::t2b);
    check_close(ghz.amps[0], Complex{1 / rt2, 0});
    check_close(ghz.amps[7], Complex{1 / rt2, 0});

    const StateVector& tri = canonical_state(StateType::t3a);
    const double rt3 = std::sqrt(3.0);
    for (int i : {0, 5, 6}) {
        check_close(tri.amps[static_cast<std::size_t>(i)], Complex{1 / rt3, 0});
    }
    for (int i : {1, 2, 3, 4, 7}) {
        check_close(tri.amps[static_cast<std::size_t>(i)], Complex{0, 0});
    }

    // type 5 carries equal 1/sqrt(5) weight on its five terms
    const StateVector& five = canonical_state(StateType::t5);
    const double rt5 = std::sqrt(5.0);
    for (int i : {0, 4, 5, 6, 7}) {
        check_close(five.amps[static_cast<std::size_t>(i)], Complex{1 / rt5, 0});
    }
}

TEST_CASE("state tags round-trip") {
    for (StateType t : kAllStateTypes) {
        const auto parsed = parse_state_tag(state_tag(t));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == t);
    }
    CHECK_FALSE(parse_state_tag("6").has_value());
    CHECK_FALSE(parse_state_tag("").has_value());
}

TEST_CASE("role parsing accepts only permutations") {
    const auto ok = parse_roles("B,A,C");
    REQUIRE(ok.has_value());
    CHECK(ok->sender == Party::B);
    CHECK(ok->cosender == Party::A);
    CHECK(ok->receiver == Party::C);
    CHECK(roles_string(*ok) == "B,A,C");

    CHECK_FALSE(parse_roles("A,A,C").has_value());
    CHECK_FALSE(parse_roles("A,B").has_value());
    CHECK_FALSE(parse_roles("A;B;C").has_value());
    CHECK_FALSE(parse_roles("A,B,D").has_value());
}

TEST_CASE("named protocol tables match their definitions") {
    const CorrectionTable& ghz = named_protocol(ProtocolName::ghz);
    CHECK(ghz.at(2, 3) == Pauli::y);
    CHECK(ghz.at(1, 1) == Pauli::identity);
    CHECK(ghz.to_string() == "IZXYZIYX");
    CHECK_FALSE(ghz.rows_equal());

    const CorrectionTable& w2 = named_protocol(ProtocolName::w2);
    CHECK(w2.at(1, 3) == Pauli::identity);
    CHECK(w2.to_string() == "XYIZXYIZ");
    CHECK(w2.rows_equal());

    const CorrectionTable& w1 = named_protocol(ProtocolName::w1);
    CHECK(w1.cells[0] == w1.cells[1]);
    CHECK(w1.to_string() == "IZXYIZXY");
}

TEST_CASE("table encoding round-trips and orders row-major") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const CorrectionTable t = rng.table();
        CHECK(CorrectionTable::decode(t.encode()).to_string() == t.to_string());
        const auto parsed = CorrectionTable::parse(t.to_string());
        REQUIRE(parsed.has_value());
        CHECK(parsed->encode() == t.encode());
    }
    // cell (k=1, j=1) carries the most significant digit
    const auto t = CorrectionTable::parse("XIIIIIII");
    REQUIRE(t.has_value());
    CHECK(t->encode() == 1u << 14);
    CHECK_FALSE(CorrectionTable::parse("IZXY").has_value());
    CHECK_FALSE(CorrectionTable::parse("IZXYIZXQ").has_value());
}

TEST_CASE("sigma_x on qubit A maps the tri-Bell state onto the W state") {
    const StateVector mapped =
        apply_single(pauli_ops::sigma_x, 0, canonical_state(StateType::t3a));
    check_equal_states(mapped, canonical_state(StateType::w_std));
}

TEST_CASE("extended GHZ states are permutation-equivalent") {
    // 3bIII is 3bI with the B and C slots exchanged
    check_equal_states(swap_qubits(canonical_state(StateType::t3bI), 1, 2),
                       canonical_state(StateType::t3bIII));
    // 3bI is 3bII with A and C exchanged followed by flipping every qubit
    check_equal_states(flip_all(swap_qubits(canonical_state(StateType::t3bII), 0, 2)),
                       canonical_state(StateType::t3bI));
}

TEST_CASE("registry shape and flags") {
    const auto& rows = scenario_registry();
    CHECK(rows.size() == 20);

    int baselines = 0, resolved = 0, symmetric = 0;
    for (const ReferenceResult& row : rows) {
        CAPTURE(row.case_label);
        CHECK(row.scenario.roles.valid());
        if (row.baseline) ++baselines;
        if (row.resolved_by_search) ++resolved;
        if (row.symmetric_roles) ++symmetric;

        if (row.family == ProtocolFamily::ghz) {
            REQUIRE(row.best.has_value());
            CHECK(row.best->kappa_star == 0.0);
            const bool quarter = std::abs(row.best->nu_star - pi / 4) < 1e-15;
            const bool eighth = std::abs(row.best->nu_star - pi / 8) < 1e-15;
            CHECK((quarter || eighth));
            // consistency with the closed-form maximum of the stored rationals
            const BestCondition from_form = best_condition(row.form());
            CHECK(std::abs(from_form.f_max - row.best->f_max) < 1e-12);
            CHECK(std::abs(from_form.nu_star - row.best->nu_star) < 1e-12);
        } else {
            CHECK(row.family == ProtocolFamily::w);
            CHECK_FALSE(row.best.has_value());
            // constant rows: the stored form has no oscillating part
            CHECK(row.b.num == 0);
            CHECK(row.c.num == 0);
            CHECK(row.d.num == 0);
        }
    }
    CHECK(baselines == 2);
    CHECK(resolved == 2);   // the rows whose protocol label names no listed table
    CHECK(symmetric == 4);  // one <-> row each for extGHZ, 4a, 4c, 5
}

TEST_CASE("registered tables reproduce every registered form") {
    for (const ReferenceResult& row : scenario_registry()) {
        CAPTURE(row.case_label);
        const FidelityForm f = extract_form(row.scenario, row.table());
        const FidelityForm want = row.form();
        CHECK(std::abs(f.a - want.a) < 1e-10);
        CHECK(std::abs(f.b - want.b) < 1e-10);
        CHECK(std::abs(f.c - want.c) < 1e-10);
        CHECK(std::abs(f.d - want.d) < 1e-10);
    }
}

TEST_CASE("W baseline roles are the brute-force resolution") {
    // Try W-std and the tri-Bell state under all role permutations with the
    // two-row-identical table of the W baseline: W-std reproduces the 7/9
    // constant for every permutation, so the canonical (A,B,C) entry stands.
    const CorrectionTable& w2 = named_protocol(ProtocolName::w2);
    constexpr Party perms[6][3] = {
        {Party::A, Party::B, Party::C}, {Party::A, Party::C, Party::B},
        {Party::B, Party::A, Party::C}, {Party::B, Party::C, Party::A},
        {Party::C, Party::A, Party::B}, {Party::C, Party::B, Party::A},
    };
    int w_hits = 0, tri_hits = 0;
    for (const auto& p : perms) {
        const RoleAssignment roles{p[0], p[1], p[2]};
        auto is_79 = [](const FidelityForm& f) {
            return std::abs(f.a - 7.0 / 9.0) < 1e-10 && std::abs(f.b) < 1e-10 &&
                   std::abs(f.c) < 1e-10 && std::abs(f.d) < 1e-10;
        };
        if (is_79(extract_form({StateType::w_std, roles}, w2))) ++w_hits;
        if (is_79(extract_form({StateType::t3a, roles}, w2))) ++tri_hits;
    }
    CHECK(w_hits == 6);
    // for the tri-Bell state the same table works exactly when A co-sends
    CHECK(tri_hits == 2);
}

TEST_SUITE_END();
