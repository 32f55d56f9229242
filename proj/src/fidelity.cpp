#include "tpt/fidelity.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace tpt {

ValidationResidualExceeded::ValidationResidualExceeded(double residual)
    : std::runtime_error("fidelity form validation residual " + std::to_string(residual) +
                         " exceeds 1e-9"),
      residual_(residual) {}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    // boost returns the non-negative zeros; mirror them for the full rule
    const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(n);
    std::vector<std::pair<double, double>> rule;
    rule.reserve(static_cast<std::size_t>(n));
    for (double x : zeros) {
        const double dp = boost::math::legendre_p_prime(n, x);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        if (x > 0.0) {
            rule.emplace_back(-x, w);
            rule.emplace_back(x, w);
        } else {
            rule.emplace_back(x, w);  // midpoint node of odd-order rules
        }
    }
    return rule;
}

const std::array<StateVector, 6>& two_design_states() {
    constexpr double pi = std::numbers::pi;
    static const std::array<StateVector, 6> states = {
        bloch_state({0.0, 0.0}),      // |0>
        bloch_state({pi, 0.0}),       // |1> (up to phase)
        bloch_state({pi / 2, 0.0}),   // |+>
        bloch_state({pi / 2, pi}),    // |->
        bloch_state({pi / 2, pi / 2}),      // |+i>
        bloch_state({pi / 2, 3 * pi / 2}),  // |-i>
    };
    return states;
}

double average_quadrature(const Scenario& s, const CorrectionTable& table,
                          const CosenderBasis& basis, int n_theta, int n_phi) {
    if (n_theta < 4) throw std::invalid_argument("average_quadrature: n_theta must be >= 4");
    if (n_phi < 8) throw std::invalid_argument("average_quadrature: n_phi must be >= 8");
    const auto rule = gauss_legendre(n_theta);
    double total = 0.0;
    for (const auto& [u, w] : rule) {
        const double theta = std::acos(u);
        for (int m = 0; m < n_phi; ++m) {
            const double phi = 2 * std::numbers::pi * m / n_phi;
            total += w * pointwise_fidelity(bloch_state({theta, phi}), s, basis, table);
        }
    }
    // (1/4pi) * (2pi/n_phi) * sum w F
    return total / (2.0 * n_phi);
}

double average_two_design(const Scenario& s, const CorrectionTable& table,
                          const CosenderBasis& basis) {
    double total = 0.0;
    for (const StateVector& info : two_design_states()) {
        total += pointwise_fidelity(info, s, basis, table);
    }
    return total / 6.0;
}

MonteCarloResult average_monte_carlo(const Scenario& s, const CorrectionTable& table,
                                     const CosenderBasis& basis, std::int64_t n,
                                     std::uint64_t seed) {
    if (n < 1000) throw std::invalid_argument("average_monte_carlo: n must be >= 1000");
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    // Welford accumulation; a naive sum of squares cancels catastrophically
    // on near-constant integrands
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double theta = std::acos(1.0 - 2.0 * uniform01());
        const double phi = 2 * std::numbers::pi * uniform01();
        const double f = pointwise_fidelity(bloch_state({theta, phi}), s, basis, table);
        const double delta = f - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (f - mean);
    }
    const double var = m2 / static_cast<double>(n - 1);
    return MonteCarloResult{mean, std::sqrt(var / static_cast<double>(n)), n, seed};
}

namespace {

constexpr double kPi = std::numbers::pi;

// 4 fit points (giving a+b, a-b, a+c, a+d) followed by 8 validation points.
constexpr std::array<CosenderBasis, 12> kEvaluationPoints = {
    CosenderBasis{0.0, 0.0},
    CosenderBasis{kPi / 2, 0.0},
    CosenderBasis{kPi / 4, 0.0},
    CosenderBasis{kPi / 4, kPi / 2},
    CosenderBasis{kPi / 8, 0.0},
    CosenderBasis{kPi / 8, kPi / 2},
    CosenderBasis{kPi / 3, kPi / 4},
    CosenderBasis{0.3, 1.1},
    CosenderBasis{1.1, 2.3},
    CosenderBasis{kPi / 5, 4.0},
    CosenderBasis{0.7, 5.5},
    CosenderBasis{1.4, 0.9},
};

}  // namespace

std::span<const CosenderBasis, 12> form_evaluation_points() {
    return std::span<const CosenderBasis, 12>(kEvaluationPoints);
}

FidelityForm fit_form(std::span<const double, 12> averages) {
    FidelityForm form;
    form.a = (averages[0] + averages[1]) / 2;
    form.b = (averages[0] - averages[1]) / 2;
    form.c = averages[2] - form.a;
    form.d = averages[3] - form.a;
    double residual = 0.0;
    for (std::size_t i = 4; i < 12; ++i) {
        const CosenderBasis& p = kEvaluationPoints[i];
        residual = std::max(residual, std::abs(form.evaluate(p.nu, p.kappa) - averages[i]));
    }
    if (residual >= 1e-9) throw ValidationResidualExceeded(residual);
    return form;
}

FidelityForm extract_form(const Scenario& s, const CorrectionTable& table) {
    std::array<double, 12> averages{};
    for (std::size_t i = 0; i < 12; ++i) {
        averages[i] = average_two_design(s, table, kEvaluationPoints[i]);
    }
    return fit_form(averages);
}

}  // namespace tpt
