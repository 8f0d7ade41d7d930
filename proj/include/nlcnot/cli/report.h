// Copyright 2026 The nlcnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NLCNOT_CLI_REPORT_H
#define NLCNOT_CLI_REPORT_H

#include <array>
#include <string>

#include "nlcnot/analysis.h"
#include "nlcnot/cli/config.h"
#include "nlcnot/json_util.h"
#include "nlcnot/purification.h"

namespace nlc::cli {

/// Outputs of `--mode validate`: both POVM pairs and the corrector
/// unitaries' unitarity residuals.
struct ValidationSummary {
    std::array<ValidationReport, 2> pairs;
    double u0_residual;
    double u1_residual;
    double u1_literal_residual;
};

ValidationSummary run_validation(const ChannelSpec &spec);

/// Outputs of `--mode exact`: closed-form values next to the engine's
/// branch-norm propagation.
struct ExactSummary {
    OutcomeDistribution analytic;
    std::array<std::optional<double>, 2> analytic_conditional;
    double analytic_total;
    BranchPropagation engine;
    double max_discrepancy;
};

ExactSummary run_exact(const RunConfig &config);

Json config_json(const RunConfig &config);
Json ledger_json(const ResourceLedger &ledger);
Json state_json(const StateVector &state);

// JSON: one object, fixed key order, reals rounded to 15 significant digits,
// trailing newline. CSV: header plus one row per trial (or per branch/pair
// for the exact and validate modes).
std::string emit_report(const RunConfig &config, const RunResult &result);
std::string emit_report(const RunConfig &config, const MonteCarloReport &report);
std::string emit_report(const RunConfig &config, const PurificationReport &report);
std::string emit_report(const RunConfig &config, const ValidationSummary &summary);
std::string emit_report(const RunConfig &config, const ExactSummary &summary);

}  // namespace nlc::cli

#endif
