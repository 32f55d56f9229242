// cli.hpp
// Command implementations behind the tpt command-line tool. Each command
// builds a ReportDocument and reports an exit status: 0 on success, 1 when a
// computed value fails validation (oracle disagreement or registry mismatch).
// Usage errors are handled by the CLI front end with exit status 2.

#pragma once

#include <cstdint>
#include <optional>

#include "tpt/report.hpp"
#include "tpt/search.hpp"

namespace tpt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
    ReportDocument doc;
    int exit_code = kExitOk;
};

struct RunParams {
    Scenario scenario;
    CorrectionTable table;
    std::string protocol_label;  // named protocol or explicit cell string
    double nu = 0.0;
    double kappa = 0.0;
    BlochAngles info{};  // information state for the per-branch records
    std::int64_t mc_samples = 100000;
    std::uint64_t seed = 0;
};

// Eight outcome records for one configuration plus the quadrature, 2-design,
// Monte-Carlo, and analytic-form averages with their cross-checks.
CommandResult cmd_run(const RunParams& p);

// One row per registry entry: computed form and best condition against the
// reference values, with per-coefficient deltas and deviation flags.
CommandResult cmd_table();

// Exhaustive table sweep for one scenario.
CommandResult cmd_search(const Scenario& s);

// Closed-form best condition for one scenario and table, grid-checked.
CommandResult cmd_optimize(const Scenario& s, const CorrectionTable& table,
                           const std::string& protocol_label);

}  // namespace tpt::cli
