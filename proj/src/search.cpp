#include "tpt/search.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tpt {

ProtocolFamily protocol_family(const CorrectionTable& t) {
    return t.rows_equal() ? ProtocolFamily::w : ProtocolFamily::ghz;
}

namespace {

constexpr std::uint32_t kTableCount = 1u << 16;  // 4^8

// Per-cell fidelity contributions, independent of the correction table:
// g[point][cell][P] with cell = 4*(k-1) + (j-1), already averaged over the
// six 2-design information states. A table's Bloch average at a point is the
// sum of its eight cell lookups.
struct CellContributions {
    // [12 points][8 cells][4 paulis]
    std::array<std::array<std::array<double, 4>, 8>, 12> g{};
};

CellContributions precompute(const Scenario& s) {
    CellContributions out;
    const auto points = form_evaluation_points();
    const auto& infos = two_design_states();
    for (std::size_t ipt = 0; ipt < points.size(); ++ipt) {
        for (const StateVector& info : infos) {
            const auto branches = branch_states(info, s, points[ipt]);
            for (int jidx = 0; jidx < 4; ++jidx) {
                for (int k = 1; k <= 2; ++k) {
                    const StateVector& pre = branches[static_cast<std::size_t>(2 * jidx + k - 1)];
                    const std::size_t cell = static_cast<std::size_t>(4 * (k - 1) + jidx);
                    for (int p = 0; p < 4; ++p) {
                        const StateVector tau =
                            apply_single(pauli_operator(static_cast<Pauli>(p)), 0, pre);
                        out.g[ipt][cell][static_cast<std::size_t>(p)] +=
                            std::norm(inner(info, tau)) / 6.0;
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

SearchReport search_tables(const Scenario& s) {
    const CellContributions ctx = precompute(s);

    SearchReport report;
    report.scenario = s;

    // pass 1: global maximum of the analytic best over all tables
    std::vector<double> fmax(kTableCount);
    double global = -1.0;
    for (std::uint32_t code = 0; code < kTableCount; ++code) {
        std::array<double, 12> averages{};
        for (int cell = 0; cell < 8; ++cell) {
            const std::uint32_t digit = (code >> (2 * (7 - cell))) & 3u;
            for (std::size_t ipt = 0; ipt < 12; ++ipt) {
                averages[ipt] += ctx.g[ipt][static_cast<std::size_t>(cell)][digit];
            }
        }
        const FidelityForm form = fit_form(averages);
        fmax[code] = best_condition(form).f_max;
        if (fmax[code] > global) global = fmax[code];
    }
    report.f_max_global = global;

    // pass 2: collect the maximizers in encoding order
    bool first = true;
    bool families_agree = true;
    for (std::uint32_t code = 0; code < kTableCount; ++code) {
        if (fmax[code] < global - 1e-9) continue;
        SearchMaximizer m;
        m.table = CorrectionTable::decode(code);
        m.form = extract_form(s, m.table);
        m.best = best_condition(m.form);
        const ProtocolFamily fam = protocol_family(m.table);
        if (first) {
            report.family = fam;
            first = false;
        } else if (fam != report.family) {
            families_agree = false;
        }
        report.maximizers.push_back(std::move(m));
    }
    if (!families_agree) report.family = ProtocolFamily::other;
    return report;
}

BestCondition optimize_angles(const Scenario& s, const CorrectionTable& t) {
    const FidelityForm form = extract_form(s, t);
    const BestCondition best = best_condition(form);

    // 720x720 grid cross-check over one full period
    constexpr int kGrid = 720;
    constexpr double pi = std::numbers::pi;
    const double dnu = pi / kGrid;
    const double dkappa = 2 * pi / kGrid;
    double grid_max = -1.0;
    double nu_at = 0.0, kappa_at = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double nu = i * dnu;
        for (int m = 0; m < kGrid; ++m) {
            const double kappa = m * dkappa;
            const double f = form.evaluate(nu, kappa);
            if (f > grid_max) {
                grid_max = f;
                nu_at = nu;
                kappa_at = kappa;
            }
        }
    }
    if (grid_max > best.f_max + 1e-9) {
        throw std::logic_error("optimize_angles: grid exceeds closed-form maximum");
    }
    if (!best.angle_independent) {
        auto wrapped = [](double x, double period) {
            double r = std::fmod(x, period);
            if (r < -period / 2) r += period;
            if (r > period / 2) r -= period;
            return std::abs(r);
        };
        if (wrapped(nu_at - best.nu_star, pi) > dnu + 1e-9) {
            throw std::logic_error("optimize_angles: grid argmax nu disagrees");
        }
        // kappa is only determined when the kappa-dependent part is present
        if (std::hypot(form.c, form.d) > 1e-10 &&
            wrapped(kappa_at - best.kappa_star, 2 * pi) > dkappa + 1e-9) {
            throw std::logic_error("optimize_angles: grid argmax kappa disagrees");
        }
    }
    return best;
}

}  // namespace tpt
