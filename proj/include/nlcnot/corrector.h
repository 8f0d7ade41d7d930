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

#ifndef NLCNOT_CORRECTOR_H
#define NLCNOT_CORRECTOR_H

#include <optional>
#include <string_view>
#include <vector>

#include "nlcnot/channel.h"
#include "nlcnot/gate.h"
#include "nlcnot/povm_element.h"
#include "nlcnot/session.h"

namespace nlc {

/// How party B turns the outcome-dependent control e-bit back into
/// a|00> + b|11>.
enum class CorrectorKind {
    /// Two-qubit unitary U_m on (B1, B2), then a Z measurement of B2.
    Cuo,
    /// CNOT(B1 -> B2) then the two-outcome measurement {S_m, 1 - S_m} on B2.
    PovmLiteral,
    /// CNOT(B1 -> B2) then a projective measurement of B2 in {psi_m, phi_m}.
    Orthogonal,
};

std::string_view to_string(CorrectorKind kind);
/// Accepts "cuo", "povm", "orth" (and the long names). Throws InvalidInput.
CorrectorKind parse_corrector_kind(std::string_view text);

/// U_m on (B1, B2) in the basis |00>, |01>, |10>, |11>, cos(theta) = beta/alpha.
/// For m = 1 the last row is (0, 1, 0, 0); the literal row (0, 1, 0, 1) has
/// norm sqrt(2). (0, 1, 0, 0) is the unitary completion and carries
/// a beta|00> + b alpha|11> to the corrected branch.
GateMatrix corrector_unitary(int m, double theta);

/// Literal U_m, including the non-unitary last row of U_1.
/// Kept for diagnostics; not usable as a gate.
ComplexMatrix corrector_unitary_literal(int m, double theta);

/// Controlled rotation with control B1 and target B2:
/// |1>|0> -> |1>(cos t|0> + sin t|1>), |1>|1> -> |1>(-sin t|0> + cos t|1>).
GateMatrix controlled_rotation(double theta);

struct CorrectorStep {
    enum class Kind { ConditionedX, ControlledU, Cnot };
    Kind kind;
    GateMatrix gate;
    std::vector<QubitLabel> targets;
};

/// U_m as a circuit in application order. For m = 1:
///   controlled_rotation(-theta) on (B1, B2), then CNOT with control B2.
/// For m = 0 the same pair is wrapped in X on B1 before and after (the
/// outcome-conditioned bit flips). Throws DecompositionNotFound if the
/// composed circuit ever disagrees with corrector_unitary.
std::vector<CorrectorStep> corrector_decomposition(int m, double theta);

/// Product of the steps as a 4x4 matrix on (B1, B2).
ComplexMatrix compose_on_b1_b2(const std::vector<CorrectorStep> &steps);

struct PovmPair {
    PovmElement success;
    PovmElement failure;
    int m;
    Eigen::Vector2cd psi;
    Eigen::Vector2cd phi;
};

/// S_m = |psi_m><psi_m| / alpha^2 and F_m = 1 - S_m, built literally, with
/// psi_0 = beta|0> + alpha|1>, psi_1 = alpha|0> + beta|1>,
/// phi_0 = alpha|0> - beta|1>, phi_1 = beta|0> - alpha|1>.
PovmPair povm_pair(int m, const ChannelSpec &spec);

struct CorrectorOutcome {
    bool succeeded;
    /// Probability that the corrector succeeds given the ES outcome.
    double probability;
    std::optional<StateVector> post_state;
};

/// Runs the corrector on a session that has been through the ES unit.
/// Allocates B2 in |0>, uses B's one-bit memory for m, and notifies A of
/// success or failure with one classical bit. Throws BadPhase.
CorrectorOutcome run_corrector(Session &session, int m, CorrectorKind kind, double draw);

}  // namespace nlc

#endif
