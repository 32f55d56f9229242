// measurement.hpp
// Measurement resources: the Bell basis, the (nu, kappa) co-sender basis,
// and Bloch-angle information states.

#pragma once

#include <utility>

#include "tpt/qcore.hpp"

namespace tpt {

// Sender outcomes j = 1..4 map to Phi+, Phi-, Psi+, Psi- in that order.
enum class BellOutcome : int {
    phi_plus = 1,
    phi_minus = 2,
    psi_plus = 3,
    psi_minus = 4,
};

inline constexpr std::array<BellOutcome, 4> kBellOutcomes = {
    BellOutcome::phi_plus, BellOutcome::phi_minus,
    BellOutcome::psi_plus, BellOutcome::psi_minus};

struct CosenderBasis {
    double nu = 0.0;     // radians
    double kappa = 0.0;  // radians
};

struct BlochAngles {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2pi)
};

StateVector bell_state(BellOutcome j);

// |mu+> = sin(nu)|0> + e^{i kappa} cos(nu)|1>
// |mu-> = cos(nu)|0> - e^{i kappa} sin(nu)|1>
// Outcome labels: k=1 <-> mu+, k=2 <-> mu-.
std::pair<StateVector, StateVector> cosender_states(const CosenderBasis& b);

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
StateVector bloch_state(const BlochAngles& a);

}  // namespace tpt
