#include "tpt/form.hpp"

#include <numbers>

namespace tpt {

BestCondition best_condition(const FidelityForm& f) {
    const double osc = std::hypot(f.b, f.c, f.d);
    if (osc < 1e-10) {
        return BestCondition{std::numbers::pi / 4, 0.0, f.a, true};
    }
    const double r = std::hypot(f.c, f.d);
    double kappa = std::atan2(f.d, f.c);
    if (kappa < 0) kappa += 2 * std::numbers::pi;
    // max over 2nu in [0, pi] of b cos(2nu) + r sin(2nu)
    const double nu = std::atan2(r, f.b) / 2;
    return BestCondition{nu, kappa, f.a + osc, false};
}

}  // namespace tpt
