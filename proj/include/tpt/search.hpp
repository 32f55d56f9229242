// search.hpp
// Exhaustive sweep over all 4^8 = 65,536 Pauli correction tables for a
// scenario, with joint (table, nu, kappa) optimization and protocol-family
// classification.

#pragma once

#include <vector>

#include "tpt/fidelity.hpp"

namespace tpt {

struct SearchMaximizer {
    CorrectionTable table;
    FidelityForm form;
    BestCondition best;
};

struct SearchReport {
    Scenario scenario;
    // Every table within 1e-9 of f_max_global, ascending by table encoding.
    std::vector<SearchMaximizer> maximizers;
    double f_max_global = 0.0;
    // Family shared by all maximizers; `other` if they disagree.
    ProtocolFamily family = ProtocolFamily::other;
};

SearchReport search_tables(const Scenario& s);

// W iff the two rows coincide cell-by-cell (the co-sender's outcome is
// irrelevant to the receiver), else GHZ.
ProtocolFamily protocol_family(const CorrectionTable& t);

// extract_form + best_condition, cross-checked against a 720x720 grid over
// (nu, kappa) in [0, pi) x [0, 2pi). Throws std::logic_error if the grid
// disagrees with the closed form.
BestCondition optimize_angles(const Scenario& s, const CorrectionTable& t);

}  // namespace tpt
