// protocol.hpp
// One full teleportation run: composite assembly, sender Bell measurement,
// co-sender mu-measurement, receiver Pauli correction. All eight (j, k)
// branches are available individually or summed into a pointwise fidelity.

#pragma once

#include <array>
#include <span>

#include "tpt/catalog.hpp"
#include "tpt/measurement.hpp"
#include "tpt/qcore.hpp"

namespace tpt {

struct OutcomeRecord {
    BellOutcome j = BellOutcome::phi_plus;
    int k = 1;
    StateVector tau_unnormalized;  // receiver's corrected state, unnormalized
    double probability = 0.0;      // norm2(tau_unnormalized)
    double branch_fidelity = 0.0;  // |<info|tau>|^2 / probability, 0 on a dead branch
};

// tensor(info, canonical_state(s.state)); info must be a normalized 1-qubit state.
StateVector assemble(const StateVector& info, const Scenario& s);

// Pre-correction residual states tau'_{jk} for all eight branches, ordered
// (j=1,k=1), (j=1,k=2), (j=2,k=1), ... This is the table-independent part of
// the pipeline; the receiver's Pauli acts on top of it.
std::array<StateVector, 8> branch_states(const StateVector& info, const Scenario& s,
                                         const CosenderBasis& basis);
// Variant with one co-sender basis per Bell outcome j.
std::array<StateVector, 8> branch_states(const StateVector& info, const Scenario& s,
                                         std::span<const CosenderBasis, 4> per_j);

OutcomeRecord run_branch(const StateVector& info, const Scenario& s,
                         const CosenderBasis& basis, const CorrectionTable& table,
                         BellOutcome j, int k);

std::array<OutcomeRecord, 8> run_all(const StateVector& info, const Scenario& s,
                                     const CosenderBasis& basis,
                                     const CorrectionTable& table);

// Sum over branches of |<info|tau_{jk}>|^2, i.e. probability-weighted fidelity
// for one information state at one (nu, kappa).
double pointwise_fidelity(const StateVector& info, const Scenario& s,
                          const CosenderBasis& basis, const CorrectionTable& table);
double pointwise_fidelity(const StateVector& info, const Scenario& s,
                          std::span<const CosenderBasis, 4> per_j,
                          const CorrectionTable& table);

}  // namespace tpt
