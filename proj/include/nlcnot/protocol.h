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

#ifndef NLCNOT_PROTOCOL_H
#define NLCNOT_PROTOCOL_H

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "nlcnot/channel.h"
#include "nlcnot/corrector.h"
#include "nlcnot/draws.h"
#include "nlcnot/error.h"
#include "nlcnot/session.h"

namespace nlc {

struct EsOutcome {
    int m;
    double probability;
};

/// Entanglement swap: CNOT(A -> A1), measure A1, send m to B, flip B1 when
/// m = 1, drop A1. Leaves (A, B1) in the control e-bit for outcome m.
/// Throws BadPhase unless the session is fresh.
EsOutcome es_unit(Session &session, double draw);

struct EcOutcome {
    int bit;
    double probability;
};

/// Entanglement-controlled NOT: CNOT(B1 -> B), H on B1, measure B1, send the
/// bit to A, Z on A when it is 1, drop B1. Throws BadPhase unless the
/// session holds a control e-bit.
EcOutcome ec_unit(Session &session, double draw);

/// |control>|target> pushed through a local CNOT, on (A, B).
StateVector direct_cnot(QubitInput control, QubitInput target);

/// a|00> + b|11> on (A, B1).
StateVector control_ebit(QubitInput control);

struct GateConfig {
    QubitInput control{M_SQRT1_2, M_SQRT1_2};
    QubitInput target{1, 0};
    ChannelSpec channel = ChannelSpec::perfect();
    CorrectorKind corrector = CorrectorKind::Cuo;
    std::uint32_t max_attempts = 64;
};

struct AttemptRecord {
    int es_outcome;
    double es_probability;
    /// Absent on a perfect channel, where the corrector is skipped.
    std::optional<bool> corrector_succeeded;
    std::optional<double> corrector_probability;
    ResourceLedger ledger;
};

struct RunResult {
    bool succeeded = false;
    std::uint32_t attempts = 0;
    std::vector<int> es_outcome_bits;
    std::vector<AttemptRecord> attempt_records;
    /// (A, B) after the gate; present iff succeeded.
    std::optional<StateVector> final_state;
    /// Summed over all attempts.
    ResourceLedger ledger;
    std::vector<TraceEvent> trace;
};

/// Runs attempts (fresh inputs and e-bit each time) until one passes the
/// corrector or max_attempts is used up. Never throws for exhaustion.
RunResult run_nonlocal_cnot(const GateConfig &config, DrawStream &draws);

class MaxAttemptsExceeded : public Error {
   public:
    explicit MaxAttemptsExceeded(RunResult result);
    const RunResult &result() const noexcept {
        return result_;
    }

   private:
    RunResult result_;
};

/// As run_nonlocal_cnot, but throws MaxAttemptsExceeded on exhaustion.
RunResult nonlocal_cnot(const GateConfig &config, DrawStream &draws);

struct BranchReport {
    int m;
    /// False when p_m is negligible; the remaining fields are then zero.
    bool reachable;
    double es_probability;
    double conditional_success;
    double joint_success;
    /// Fidelity of the corrected (A, B1, B) state with a|00>+b|11> (x) |target>.
    double control_ebit_fidelity;
    /// Fidelity of the final (A, B) with the direct CNOT output.
    double gate_fidelity;
};

struct BranchPropagation {
    std::array<BranchReport, 2> branches;
    double total_success;
};

/// Propagates both ES branches through the engine by post-selection and
/// reads every probability off branch norms (no sampling).
BranchPropagation propagate_branches(const GateConfig &config);

}  // namespace nlc

#endif
