// fidelity.hpp
// Bloch-sphere averaging of the pointwise fidelity by three independent
// routes (Gauss-Legendre quadrature, spherical 2-design, Monte Carlo), the
// 4-coefficient analytic form extraction, and its closed-form maximization
// (best_condition lives in form.hpp).

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tpt/form.hpp"
#include "tpt/protocol.hpp"

namespace tpt {

// Thrown when evaluations do not fit the 4-term model within 1e-9 (per-j
// co-sender bases, or a broken channel).
class ValidationResidualExceeded : public std::runtime_error {
public:
    explicit ValidationResidualExceeded(double residual);
    double residual() const { return residual_; }

private:
    double residual_;
};

// Nodes and weights on [-1, 1]; exact for polynomials of degree <= 2n-1.
std::vector<std::pair<double, double>> gauss_legendre(int n);

// The six Pauli eigenstates |0>, |1>, |+>, |->, |+i>, |-i>: a spherical
// 2-design, so their mean reproduces the Haar average of any observable
// quadratic in the input density matrix -- which the branch-summed fidelity is.
const std::array<StateVector, 6>& two_design_states();

// Exact value of the Bloch average via product quadrature: Gauss-Legendre in
// u = cos(theta) (n_theta >= 4 nodes) times uniform nodes in phi
// (n_phi >= 8). The integrand has harmonic degree <= 2 in each angle, so
// these node counts already integrate it exactly.
double average_quadrature(const Scenario& s, const CorrectionTable& table,
                          const CosenderBasis& basis, int n_theta = 6, int n_phi = 12);

double average_two_design(const Scenario& s, const CorrectionTable& table,
                          const CosenderBasis& basis);

struct MonteCarloResult {
    double mean = 0.0;
    double stderr_est = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

// Haar sampling via theta = arccos(1 - 2u), u and phi uniform. Deterministic
// for a fixed seed; requires n >= 1000.
MonteCarloResult average_monte_carlo(const Scenario& s, const CorrectionTable& table,
                                     const CosenderBasis& basis, std::int64_t n,
                                     std::uint64_t seed);

// Solves (a, b, c, d) from exact averages at (nu, kappa) in
// {(0,0), (pi/2,0), (pi/4,0), (pi/4,pi/2)} and validates the model at 8
// further points; throws ValidationResidualExceeded past 1e-9.
FidelityForm extract_form(const Scenario& s, const CorrectionTable& table);

// The 12 (nu, kappa) evaluation angles behind extract_form: 4 fit points
// followed by 8 validation points. Exposed so the exhaustive search can fit
// the same model from precomputed averages.
std::span<const CosenderBasis, 12> form_evaluation_points();

// Fit + validation step on averages taken at form_evaluation_points().
FidelityForm fit_form(std::span<const double, 12> averages);

}  // namespace tpt
