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

#ifndef NLCNOT_PURIFICATION_H
#define NLCNOT_PURIFICATION_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nlcnot/analysis.h"
#include "nlcnot/protocol.h"

namespace nlc {

/// Compact per-trial record; traces are not retained.
struct TrialRow {
    std::uint64_t trial;
    std::uint32_t attempts;
    bool succeeded;
    std::vector<int> es_outcome_bits;
    std::optional<double> fidelity;
    std::optional<double> entropy;
};

/// Receives each trial's trace before it is dropped.
using TraceSink = std::function<void(std::uint64_t trial, std::span<const TraceEvent> trace)>;

struct PurificationReport {
    ChannelSpec channel;
    CorrectorKind corrector;
    std::uint64_t seed;
    double expected_rate;
    Stats stats;
    /// Success-conditioned; NaN when nothing succeeded.
    double mean_fidelity;
    double min_fidelity;
    double mean_entropy;
    double min_entropy;
    double max_entropy;
    std::size_t cross_party_gate_events;
    ResourceLedger ledger;
    std::vector<TrialRow> rows;
};

/// Control (|0> + |1>)/sqrt(2), target |0>, one attempt per trial: each
/// success leaves (A, B) in (|00> + |11>)/sqrt(2). Trial i draws from
/// SeededDraws(seed, i).
PurificationReport purification_experiment(
    const ChannelSpec &channel,
    CorrectorKind corrector,
    std::uint64_t trials,
    std::uint64_t seed,
    const TraceSink &sink = nullptr);

/// Repeated runs of an arbitrary configuration, trial i from
/// SeededDraws(seed, i). Expected success is 1 - (1 - p)^max_attempts.
struct MonteCarloReport {
    GateConfig config;
    std::uint64_t seed;
    double expected_rate;
    Stats stats;
    double mean_attempts;
    double min_fidelity;
    std::size_t cross_party_gate_events;
    ResourceLedger ledger;
    std::vector<TrialRow> rows;
};

MonteCarloReport monte_carlo_experiment(
    const GateConfig &config, std::uint64_t trials, std::uint64_t seed, const TraceSink &sink = nullptr);

/// (|00> + |11>)/sqrt(2) on (A, B).
StateVector bell_pair_ab();

}  // namespace nlc

#endif
