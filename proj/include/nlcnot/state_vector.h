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

#ifndef NLCNOT_STATE_VECTOR_H
#define NLCNOT_STATE_VECTOR_H

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "nlcnot/linalg.h"

namespace nlc {

class GateMatrix;
class PovmElement;

struct QubitLabel {
    std::string name;

    auto operator<=>(const QubitLabel &) const = default;
};

std::ostream &operator<<(std::ostream &out, const QubitLabel &label);

/// Normalized pure state over up to eight labeled qubits.
///
/// Labels are ordered; the label at position 0 is the most significant bit
/// of the amplitude index, so the ket |x0 x1 ... x(n-1)> written in label
/// order maps to index sum_k x_k 2^(n-1-k). Instances are immutable; every
/// engine operation returns a new value.
class StateVector {
   public:
    static constexpr std::size_t kMaxQubits = 8;
    static constexpr double kNormTol = 1e-12;

    /// Normalizes the input. Throws LengthMismatch, ZeroNorm, NonFinite,
    /// DuplicateLabel, TooManyQubits.
    StateVector(std::vector<Amplitude> amplitudes, std::vector<QubitLabel> labels);

    std::size_t qubit_count() const noexcept {
        return labels_.size();
    }
    std::size_t dimension() const noexcept {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    Amplitude amplitude(std::size_t index) const {
        return amps_.at(index);
    }
    const std::vector<QubitLabel> &labels() const noexcept {
        return labels_;
    }

    bool contains(const QubitLabel &label) const noexcept;
    /// Throws UnknownLabel.
    std::size_t position_of(const QubitLabel &label) const;
    /// Bit shift of the qubit inside an amplitude index.
    std::size_t shift_of(const QubitLabel &label) const;

    double norm_squared() const noexcept;

   private:
    std::vector<Amplitude> amps_;
    std::vector<QubitLabel> labels_;
};

struct MeasurementRecord {
    QubitLabel qubit;
    int outcome;
    double probability;
    StateVector post_state;
};

struct RankOneResult {
    double probability;
    /// Remaining qubits after the collapse; absent when the branch has
    /// negligible probability.
    std::optional<StateVector> post_state;
};

StateVector make_state(std::span<const Amplitude> amplitudes, std::span<const QubitLabel> labels);

/// Computational basis state; `bits[k]` belongs to `labels[k]`.
StateVector basis_state(std::span<const QubitLabel> labels, std::span<const int> bits);

/// Labels of `right` are appended after those of `left`.
StateVector tensor(const StateVector &left, const StateVector &right);

/// Same state with qubits reordered to `order` (a permutation of the labels).
StateVector permute(const StateVector &state, std::span<const QubitLabel> order);

/// Drops a qubit that is in a product state with the rest. Throws
/// NotSeparable when the residual exceeds `tol`.
StateVector discard_qubit(const StateVector &state, const QubitLabel &qubit, double tol = kDecompositionTol);

/// The gate's first target is the most significant bit of the gate's basis.
/// Throws UnknownLabel, ArityMismatch.
StateVector apply_gate(const StateVector &state, const GateMatrix &gate, std::span<const QubitLabel> targets);

/// Outcome 0 iff `draw < P(0)`. The branch for a probability-zero outcome is
/// never selected. Throws UnknownLabel, BadDraw.
MeasurementRecord measure_projective(const StateVector &state, const QubitLabel &qubit, double draw);

/// Post-selects outcome `outcome` of a computational basis measurement.
/// `post_state` is meaningful only when `probability` is non-negligible.
MeasurementRecord project(const StateVector &state, const QubitLabel &qubit, int outcome);

/// Applies a rank-one element k|v><v| to `qubit`: the probability is
/// <psi|E|psi> and the surviving qubits are left in the renormalized
/// contraction <v|psi>. The measured qubit is removed from the result.
/// Throws NotRankOne, UnknownLabel.
RankOneResult apply_rank_one_element(const StateVector &state, const QubitLabel &qubit, const PovmElement &element);

/// Singular values of the coefficient matrix for the cut `left | rest`,
/// descending. Throws BadPartition, UnknownLabel.
std::vector<double> schmidt_spectrum(const StateVector &state, std::span<const QubitLabel> left);

/// |<s1|s2>|^2 with qubits aligned by label. Throws LabelMismatch.
double fidelity(const StateVector &s1, const StateVector &s2);

/// Throws ArityMismatch.
bool gates_equal_up_to_phase(const GateMatrix &g1, const GateMatrix &g2, double tol);

}  // namespace nlc

#endif
