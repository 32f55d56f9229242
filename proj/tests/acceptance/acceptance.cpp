// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. argv[1] must point at the tpt command-line binary (used by
// criterion 9).

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tpt/cli.hpp"
#include "tpt/fidelity.hpp"
#include "tpt/search.hpp"

using namespace tpt;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;
std::vector<std::string> g_details;

double circular(double x, double y, double period) {
    double r = std::fmod(std::abs(x - y), period);
    return std::min(r, period - r);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int criterion, const std::string& label, bool ok, double seconds,
            const std::string& summary) {
    std::printf("[%s] criterion %d: %s — %s (%.2f s)\n", ok ? "PASS" : "FAIL", criterion,
                label.c_str(), summary.c_str(), seconds);
    for (const std::string& d : g_details) std::printf("       %s\n", d.c_str());
    g_details.clear();
    if (!ok) ++g_failures;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(eng_() >> 11) * 0x1.0p-53);
    }
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

// --- criterion 1: formula reproduction --------------------------------------
void criterion1() {
    Timer timer;
    double worst = 0.0;
    bool ok = true;
    for (const ReferenceResult& row : scenario_registry()) {
        const FidelityForm f = extract_form(row.scenario, row.table());
        const FidelityForm want = row.form();
        const double delta = std::max({std::abs(f.a - want.a), std::abs(f.b - want.b),
                                       std::abs(f.c - want.c), std::abs(f.d - want.d)});
        worst = std::max(worst, delta);
        if (delta >= 1e-10) {
            ok = false;
            g_details.push_back(row.case_label + ": coefficient delta " +
                                format_double(delta));
        }
    }
    const double sec = timer.seconds();
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%zu rows, max coefficient delta %.2e",
                  scenario_registry().size(), worst);
    report(1, "formula reproduction", ok && sec < 1.0, sec, buf);
}

// --- criterion 2: best-condition reproduction -------------------------------
void criterion2() {
    Timer timer;
    bool ok = true;
    int rows = 0;
    for (const ReferenceResult& row : scenario_registry()) {
        if (row.family != ProtocolFamily::ghz) continue;
        ++rows;
        const BestCondition best = best_condition(extract_form(row.scenario, row.table()));
        const BestCondition& want = *row.best;
        const bool row_ok = !best.angle_independent &&
                            circular(best.nu_star, want.nu_star, kPi) < 1e-10 &&
                            circular(best.kappa_star, want.kappa_star, 2 * kPi) < 1e-10 &&
                            std::abs(best.f_max - want.f_max) < 1e-10;
        if (!row_ok) {
            ok = false;
            g_details.push_back(row.case_label + ": got nu*=" + format_double(best.nu_star) +
                                " kappa*=" + format_double(best.kappa_star) +
                                " f_max=" + format_double(best.f_max));
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d GHZ-family rows at kappa*=0, nu* in {pi/4, pi/8}",
                  rows);
    report(2, "best-condition reproduction", ok, timer.seconds(), buf);
}

// --- criterion 3: oracle triangle --------------------------------------------
void criterion3() {
    Timer timer;
    bool ok = true;
    double worst = 0.0;
    Rng rng(303);
    for (const ReferenceResult& row : scenario_registry()) {
        const FidelityForm form = extract_form(row.scenario, row.table());
        for (int i = 0; i < 50; ++i) {
            const CosenderBasis b{rng.uniform(0.0, kPi), rng.uniform(0.0, 2 * kPi)};
            const double q = average_quadrature(row.scenario, row.table(), b);
            const double d = average_two_design(row.scenario, row.table(), b);
            const double f = form.evaluate(b.nu, b.kappa);
            const double spread =
                std::max({std::abs(q - d), std::abs(q - f), std::abs(d - f)});
            worst = std::max(worst, spread);
            if (spread >= 1e-10) ok = false;
        }
        // Monte Carlo leg, fixed seed, absolute floor for zero-variance rows
        const CosenderBasis b{0.6, 1.1};
        const MonteCarloResult mc =
            average_monte_carlo(row.scenario, row.table(), b, 100000, 2024);
        const double q = average_quadrature(row.scenario, row.table(), b);
        if (std::abs(mc.mean - q) >= std::max(5 * mc.stderr_est, 1e-12)) {
            ok = false;
            g_details.push_back(row.case_label + ": MC " + format_double(mc.mean) +
                                " vs " + format_double(q) + " +- " +
                                format_double(mc.stderr_est));
        }
    }
    const double sec = timer.seconds();
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "quadrature/2-design/form pairwise <= %.2e over %zu rows x 50 angles; "
                  "MC within 5 sigma", worst, scenario_registry().size());
    report(3, "oracle triangle", ok && sec < 30.0, sec, buf);
}

// --- criterion 4: quadrature exactness ---------------------------------------
void criterion4() {
    Timer timer;
    bool ok = true;
    double worst = 0.0;
    Rng rng(404);
    for (const ReferenceResult& row : scenario_registry()) {
        for (int i = 0; i < 5; ++i) {
            const CosenderBasis b{rng.uniform(0.0, kPi), rng.uniform(0.0, 2 * kPi)};
            const double coarse = average_quadrature(row.scenario, row.table(), b, 6, 12);
            const double fine = average_quadrature(row.scenario, row.table(), b, 12, 24);
            worst = std::max(worst, std::abs(coarse - fine));
            if (std::abs(coarse - fine) >= 1e-12) ok = false;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max change under node doubling %.2e", worst);
    report(4, "quadrature exactness", ok, timer.seconds(), buf);
}

// --- criterion 5: probability conservation -----------------------------------
void criterion5() {
    Timer timer;
    bool ok = true;
    double worst = 0.0;
    Rng rng(505);
    constexpr Party perms[6][3] = {
        {Party::A, Party::B, Party::C}, {Party::A, Party::C, Party::B},
        {Party::B, Party::A, Party::C}, {Party::B, Party::C, Party::A},
        {Party::C, Party::A, Party::B}, {Party::C, Party::B, Party::A},
    };
    for (int draw = 0; draw < 1000; ++draw) {
        const StateType t = kAllStateTypes[rng.raw() % kAllStateTypes.size()];
        const auto& p = perms[rng.raw() % 6];
        const Scenario s{t, {p[0], p[1], p[2]}};
        const StateVector info =
            bloch_state({std::acos(rng.uniform(-1.0, 1.0)), rng.uniform(0.0, 2 * kPi)});
        const CosenderBasis b{rng.uniform(0.0, kPi), rng.uniform(0.0, 2 * kPi)};
        const CorrectionTable table =
            CorrectionTable::decode(static_cast<std::uint32_t>(rng.raw() & 0xffffu));
        double total = 0.0;
        for (const OutcomeRecord& rec : run_all(info, s, b, table)) {
            total += rec.probability;
        }
        worst = std::max(worst, std::abs(total - 1.0));
        if (std::abs(total - 1.0) >= 1e-12) ok = false;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "1000 random draws, max |sum p - 1| = %.2e", worst);
    report(5, "probability conservation", ok, timer.seconds(), buf);
}

// --- criterion 6: protocol search --------------------------------------------
void criterion6() {
    Timer timer;
    // the sweep contexts: the GHZ baseline, the three extended-GHZ role rows,
    // and one row each of 4a/4b/4c/5
    const Scenario contexts[] = {
        {StateType::t2b, {Party::A, Party::B, Party::C}},
        {StateType::t3bI, {Party::C, Party::B, Party::A}},
        {StateType::t3bI, {Party::B, Party::C, Party::A}},
        {StateType::t3bI, {Party::B, Party::A, Party::C}},
        {StateType::t4a, {Party::A, Party::B, Party::C}},
        {StateType::t4bI, {Party::B, Party::A, Party::C}},
        {StateType::t4c, {Party::B, Party::A, Party::C}},
        {StateType::t5, {Party::B, Party::A, Party::C}},
    };
    bool ok = true;
    double slowest = 0.0;
    for (const Scenario& s : contexts) {
        const ReferenceResult* ref = nullptr;
        for (const ReferenceResult& row : scenario_registry()) {
            if (row.scenario.state == s.state &&
                row.scenario.roles.sender == s.roles.sender &&
                row.scenario.roles.cosender == s.roles.cosender &&
                row.scenario.roles.receiver == s.roles.receiver) {
                ref = &row;
            }
        }
        Timer one;
        const SearchReport swept = search_tables(s);
        slowest = std::max(slowest, one.seconds());
        const bool value_ok = std::abs(swept.f_max_global - ref->f_max()) < 1e-9;
        const bool family_ok = swept.family == ref->family;
        const bool in_time = one.seconds() < 60.0;
        if (!(value_ok && family_ok && in_time)) ok = false;
        char line[256];
        std::snprintf(line, sizeof(line),
                      "%-5s %s: f_max %.12f vs reference %.12f%s, family %s vs %s%s",
                      std::string(state_tag(s.state)).c_str(),
                      roles_string(s.roles).c_str(), swept.f_max_global, ref->f_max(),
                      value_ok ? "" : " [sweep exceeds]",
                      std::string(family_name(swept.family)).c_str(),
                      std::string(family_name(ref->family)).c_str(),
                      family_ok ? "" : " [mismatch]");
        g_details.push_back(line);
    }
    if (!ok) {
        g_details.push_back(
            "the joint (table, nu, kappa) sweep strictly improves on the reference "
            "protocols for the flagged scenarios; the finding is reported by `tpt "
            "search` as exceeds_reference");
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "8 scenario contexts, slowest sweep %.2f s", slowest);
    report(6, "protocol search reproduces the reference optima", ok, timer.seconds(), buf);
}

// --- criterion 7: GHZ/W crossover ---------------------------------------------
void criterion7() {
    Timer timer;
    const FidelityForm ghz{2.0 / 3.0, 0.0, 1.0 / 3.0, 0.0};
    const FidelityForm w{7.0 / 9.0, 0.0, 0.0, 0.0};
    Rng rng(707);
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        const double nu = rng.uniform(0.0, kPi);
        const double margin = std::sin(2 * nu) - 1.0 / 3.0;
        if (std::abs(margin) < 1e-12) continue;
        const double diff = ghz.evaluate(nu, 0.0) - w.evaluate(nu, 0.0);
        if (diff * margin <= 0.0) ok = false;
    }
    report(7, "GHZ/W crossover at sin(2 nu) = 1/3", ok, timer.seconds(),
           "sign agreement at 100 sampled angles");
}

// --- criterion 8: tri-Bell / W equivalence ------------------------------------
void criterion8() {
    Timer timer;
    bool ok = true;

    // exact amplitude map under sigma_x on qubit A
    const StateVector mapped =
        apply_single(pauli_ops::sigma_x, 0, canonical_state(StateType::t3a));
    const StateVector& w = canonical_state(StateType::w_std);
    for (int i = 0; i < 8; ++i) {
        if (std::abs(mapped.amps[static_cast<std::size_t>(i)] -
                     w.amps[static_cast<std::size_t>(i)]) != 0.0) {
            ok = false;
            g_details.push_back("sigma_x(A) tri-Bell != W at amplitude " + std::to_string(i));
        }
    }

    // identical forms under corresponding role permutations: the tri-Bell
    // state reproduces the W rows with W-I when party A sends or receives and
    // with W-II when A co-sends
    constexpr Party perms[6][3] = {
        {Party::A, Party::B, Party::C}, {Party::A, Party::C, Party::B},
        {Party::B, Party::A, Party::C}, {Party::B, Party::C, Party::A},
        {Party::C, Party::A, Party::B}, {Party::C, Party::B, Party::A},
    };
    double worst = 0.0;
    for (const auto& p : perms) {
        const RoleAssignment roles{p[0], p[1], p[2]};
        const ProtocolName tri_table =
            (roles.cosender == Party::A) ? ProtocolName::w2 : ProtocolName::w1;
        const FidelityForm fw = extract_form({StateType::w_std, roles},
                                             named_protocol(ProtocolName::w2));
        const FidelityForm f3 =
            extract_form({StateType::t3a, roles}, named_protocol(tri_table));
        const double delta = std::max({std::abs(fw.a - f3.a), std::abs(fw.b - f3.b),
                                       std::abs(fw.c - f3.c), std::abs(fw.d - f3.d),
                                       std::abs(fw.a - 7.0 / 9.0)});
        worst = std::max(worst, delta);
        if (delta >= 1e-10) {
            ok = false;
            g_details.push_back("role permutation " + roles_string(roles) +
                                ": form delta " + format_double(delta));
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "exact amplitude map; six role permutations, max form delta %.2e", worst);
    report(8, "tri-Bell / W-state equivalence", ok, timer.seconds(), buf);
}

// --- criterion 9: CLI contract -------------------------------------------------
void criterion9(const char* cli_path) {
    Timer timer;
    bool ok = true;
    const std::string out1 = "acceptance_table_run1.json";
    const std::string out2 = "acceptance_table_run2.json";
    auto invoke = [&](const std::string& out) {
        const std::string cmd =
            std::string(cli_path) + " table --format json --out " + out;
        return std::system(cmd.c_str()) == 0;
    };
    if (!invoke(out1) || !invoke(out2)) {
        ok = false;
        g_details.push_back("tpt table --format json exited nonzero");
    }
    auto slurp = [](const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const std::string text1 = slurp(out1);
    const std::string text2 = slurp(out2);
    if (text1.empty() || text1 != text2) {
        ok = false;
        g_details.push_back("table documents are not byte-identical across runs");
    }

    // the document must reproduce criteria 1-2 values
    int rows = 0;
    try {
        const auto doc = nlohmann::json::parse(text1);
        for (const auto& row : doc.at("rows")) {
            ++rows;
            auto ratio = [&row](const char* num, const char* den) {
                return static_cast<double>(row.at(num).get<std::int64_t>()) /
                       static_cast<double>(row.at(den).get<std::int64_t>());
            };
            const bool form_ok =
                std::abs(row.at("computed_a").get<double>() -
                         ratio("ref_a_num", "ref_a_den")) < 1e-10 &&
                std::abs(row.at("computed_b").get<double>() -
                         ratio("ref_b_num", "ref_b_den")) < 1e-10 &&
                std::abs(row.at("computed_c").get<double>() -
                         ratio("ref_c_num", "ref_c_den")) < 1e-10 &&
                std::abs(row.at("computed_d").get<double>() -
                         ratio("ref_d_num", "ref_d_den")) < 1e-10;
            bool cond_ok = true;
            if (!row.at("ref_nu_star").is_null()) {
                cond_ok = circular(row.at("computed_nu_star").get<double>(),
                                   row.at("ref_nu_star").get<double>(), kPi) < 1e-10 &&
                          circular(row.at("computed_kappa_star").get<double>(),
                                   row.at("ref_kappa_star").get<double>(), 2 * kPi) < 1e-10 &&
                          std::abs(row.at("computed_f_max").get<double>() -
                                   row.at("ref_f_max").get<double>()) < 1e-10;
            }
            if (!form_ok || !cond_ok || !row.at("row_ok").get<bool>()) {
                ok = false;
                g_details.push_back("row " + row.at("case").get<std::string>() +
                                    " fails the document check");
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        g_details.push_back(std::string("document parse failure: ") + e.what());
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    char buf[96];
    std::snprintf(buf, sizeof(buf), "exit 0, byte-identical runs, %d rows re-verified", rows);
    report(9, "CLI table contract", ok, timer.seconds(), buf);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-tpt-cli>\n");
        return 2;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9(argv[1]);
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
