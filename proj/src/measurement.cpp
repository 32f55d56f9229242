#include "tpt/measurement.hpp"

#include <cmath>
#include <numbers>

namespace tpt {

StateVector bell_state(BellOutcome j) {
    const double s = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> v(4);
    switch (j) {
        case BellOutcome::phi_plus:  v[0] = s; v[3] = s; break;
        case BellOutcome::phi_minus: v[0] = s; v[3] = -s; break;
        case BellOutcome::psi_plus:  v[1] = s; v[2] = s; break;
        case BellOutcome::psi_minus: v[1] = s; v[2] = -s; break;
    }
    return StateVector{2, std::move(v), true};
}

std::pair<StateVector, StateVector> cosender_states(const CosenderBasis& b) {
    const double sn = std::sin(b.nu);
    const double cs = std::cos(b.nu);
    const Complex phase = std::polar(1.0, b.kappa);
    StateVector plus{1, {Complex{sn, 0}, phase * cs}, true};
    StateVector minus{1, {Complex{cs, 0}, -phase * sn}, true};
    return {std::move(plus), std::move(minus)};
}

StateVector bloch_state(const BlochAngles& a) {
    const double c = std::cos(a.theta / 2);
    const double s = std::sin(a.theta / 2);
    return StateVector{1, {Complex{c, 0}, std::polar(1.0, a.phi) * s}, true};
}

}  // namespace tpt
