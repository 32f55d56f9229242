// form.hpp
// The analytic fingerprint of a scenario+protocol: the Bloch-averaged
// fidelity of any Pauli-corrected run is F(nu, kappa) =
//   a + b*cos(2 nu) + c*cos(kappa)*sin(2 nu) + d*sin(kappa)*sin(2 nu),
// because the post-measurement amplitudes are linear in sin(nu) and
// e^{-i kappa} cos(nu). This header holds the form and its closed-form
// maximization.

#pragma once

#include <cmath>
#include <cstdint>

namespace tpt {

struct FidelityForm {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    double evaluate(double nu, double kappa) const {
        return a + b * std::cos(2 * nu) +
               (c * std::cos(kappa) + d * std::sin(kappa)) * std::sin(2 * nu);
    }
};

struct BestCondition {
    double nu_star = 0.0;     // [0, pi)
    double kappa_star = 0.0;  // [0, 2pi)
    double f_max = 0.0;
    bool angle_independent = false;
};

// Analytic maximum: f_max = a + sqrt(b^2 + c^2 + d^2), attained at
// kappa* = atan2(d, c) and 2 nu* = atan2(hypot(c, d), b). When the
// oscillating part vanishes (below 1e-10) the condition is reported as
// angle-independent with canonical angles (pi/4, 0).
BestCondition best_condition(const FidelityForm& f);

// Exact rational coefficient, for the reference registry and reports.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace tpt
