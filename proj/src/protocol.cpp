#include "tpt/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace tpt {

namespace {

struct BranchContext {
    int sender_qubit;
    int cosender_pos;  // position of the co-sender qubit in the 2-qubit residual
};

BranchContext branch_context(const Scenario& s) {
    if (!s.roles.valid()) {
        throw std::invalid_argument("scenario roles must be a permutation of A,B,C");
    }
    const int qs = party_qubit(s.roles.sender);
    const int qc = party_qubit(s.roles.cosender);
    const int qr = party_qubit(s.roles.receiver);
    // After projecting out qubits (0, qs) the two survivors keep their
    // relative order, so the co-sender sits first iff its index is lower.
    return BranchContext{qs, qc < qr ? 0 : 1};
}

}  // namespace

StateVector assemble(const StateVector& info, const Scenario& s) {
    if (info.n_qubits != 1) {
        throw std::invalid_argument("assemble: information state must be one qubit");
    }
    if (!info.normalized) {
        throw std::invalid_argument("assemble: information state must be normalized");
    }
    return tensor(info, canonical_state(s.state));
}

std::array<StateVector, 8> branch_states(const StateVector& info, const Scenario& s,
                                         const CosenderBasis& basis) {
    const std::array<CosenderBasis, 4> per_j{basis, basis, basis, basis};
    return branch_states(info, s, std::span<const CosenderBasis, 4>(per_j));
}

std::array<StateVector, 8> branch_states(const StateVector& info, const Scenario& s,
                                         std::span<const CosenderBasis, 4> per_j) {
    const BranchContext ctx = branch_context(s);
    const StateVector composite = assemble(info, s);
    std::array<StateVector, 8> out;
    for (int jidx = 0; jidx < 4; ++jidx) {
        const StateVector after_bell =
            project_pair(bell_state(kBellOutcomes[static_cast<std::size_t>(jidx)]), 0,
                         ctx.sender_qubit, composite);
        const auto [mu_plus, mu_minus] = cosender_states(per_j[static_cast<std::size_t>(jidx)]);
        out[static_cast<std::size_t>(2 * jidx)] =
            project_single(mu_plus, ctx.cosender_pos, after_bell);
        out[static_cast<std::size_t>(2 * jidx + 1)] =
            project_single(mu_minus, ctx.cosender_pos, after_bell);
    }
    return out;
}

OutcomeRecord run_branch(const StateVector& info, const Scenario& s,
                         const CosenderBasis& basis, const CorrectionTable& table,
                         BellOutcome j, int k) {
    if (k != 1 && k != 2) {
        throw std::invalid_argument("run_branch: k must be 1 or 2");
    }
    const BranchContext ctx = branch_context(s);
    const StateVector after_bell = project_pair(bell_state(j), 0, ctx.sender_qubit,
                                                assemble(info, s));
    const auto [mu_plus, mu_minus] = cosender_states(basis);
    const StateVector after_mu =
        project_single(k == 1 ? mu_plus : mu_minus, ctx.cosender_pos, after_bell);
    StateVector tau = apply_single(pauli_operator(table.at(k, static_cast<int>(j))), 0, after_mu);

    OutcomeRecord rec;
    rec.j = j;
    rec.k = k;
    rec.probability = norm2(tau);
    const double overlap = std::norm(inner(info, tau));
    // dead branches carry fidelity 0 by convention, avoiding 0/0
    rec.branch_fidelity = rec.probability > 0.0 ? overlap / rec.probability : 0.0;
    rec.tau_unnormalized = std::move(tau);
    return rec;
}

std::array<OutcomeRecord, 8> run_all(const StateVector& info, const Scenario& s,
                                     const CosenderBasis& basis,
                                     const CorrectionTable& table) {
    std::array<OutcomeRecord, 8> out;
    for (int jidx = 0; jidx < 4; ++jidx) {
        for (int k = 1; k <= 2; ++k) {
            out[static_cast<std::size_t>(2 * jidx + k - 1)] =
                run_branch(info, s, basis, table, kBellOutcomes[static_cast<std::size_t>(jidx)], k);
        }
    }
    return out;
}

namespace {

double sum_branches(const StateVector& info, const std::array<StateVector, 8>& branches,
                    const CorrectionTable& table) {
    double total = 0.0;
    for (int jidx = 0; jidx < 4; ++jidx) {
        for (int k = 1; k <= 2; ++k) {
            const StateVector& pre = branches[static_cast<std::size_t>(2 * jidx + k - 1)];
            const StateVector tau =
                apply_single(pauli_operator(table.at(k, jidx + 1)), 0, pre);
            total += std::norm(inner(info, tau));
        }
    }
    return total;
}

}  // namespace

double pointwise_fidelity(const StateVector& info, const Scenario& s,
                          const CosenderBasis& basis, const CorrectionTable& table) {
    return sum_branches(info, branch_states(info, s, basis), table);
}

double pointwise_fidelity(const StateVector& info, const Scenario& s,
                          std::span<const CosenderBasis, 4> per_j,
                          const CorrectionTable& table) {
    return sum_branches(info, branch_states(info, s, per_j), table);
}

}  // namespace tpt
