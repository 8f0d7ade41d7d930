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

#include "nlcnot/state_vector.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "nlcnot/error.h"
#include "nlcnot/gate.h"
#include "nlcnot/povm_element.h"

namespace nlc {

std::ostream &operator<<(std::ostream &out, const QubitLabel &label) {
    return out << label.name;
}

StateVector::StateVector(std::vector<Amplitude> amplitudes, std::vector<QubitLabel> labels)
    : amps_(std::move(amplitudes)), labels_(std::move(labels)) {
    if (labels_.size() > kMaxQubits) {
        throw Error(ErrorCode::TooManyQubits, "at most 8 qubits are supported");
    }
    if (amps_.size() != (std::size_t{1} << labels_.size())) {
        throw Error(
            ErrorCode::LengthMismatch,
            std::to_string(amps_.size()) + " amplitudes for " + std::to_string(labels_.size()) + " qubits");
    }
    std::set<QubitLabel> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
        throw Error(ErrorCode::DuplicateLabel, "qubit labels must be distinct");
    }
    double n2 = 0;
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NonFinite, "amplitude is not finite");
        }
        n2 += std::norm(a);
    }
    if (!(n2 > 0)) {
        throw Error(ErrorCode::ZeroNorm, "state has zero norm");
    }
    double scale = 1 / std::sqrt(n2);
    for (auto &a : amps_) {
        a *= scale;
    }
}

bool StateVector::contains(const QubitLabel &label) const noexcept {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t StateVector::position_of(const QubitLabel &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw Error(ErrorCode::UnknownLabel, "qubit '" + label.name + "' is not in the state");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t StateVector::shift_of(const QubitLabel &label) const {
    return labels_.size() - 1 - position_of(label);
}

double StateVector::norm_squared() const noexcept {
    double n2 = 0;
    for (const auto &a : amps_) {
        n2 += std::norm(a);
    }
    return n2;
}

namespace {

/// Removes bit `shift` from `index`, closing the gap.
std::size_t squeeze_bit(std::size_t index, std::size_t shift) {
    std::size_t low = index & ((std::size_t{1} << shift) - 1);
    std::size_t high = (index >> (shift + 1)) << shift;
    return high | low;
}

std::vector<QubitLabel> without(const std::vector<QubitLabel> &labels, const QubitLabel &drop) {
    std::vector<QubitLabel> out;
    out.reserve(labels.size());
    for (const auto &l : labels) {
        if (l != drop) {
            out.push_back(l);
        }
    }
    return out;
}

}  // namespace

StateVector make_state(std::span<const Amplitude> amplitudes, std::span<const QubitLabel> labels) {
    return StateVector(
        std::vector<Amplitude>(amplitudes.begin(), amplitudes.end()),
        std::vector<QubitLabel>(labels.begin(), labels.end()));
}

StateVector basis_state(std::span<const QubitLabel> labels, std::span<const int> bits) {
    if (bits.size() != labels.size()) {
        throw Error(ErrorCode::LengthMismatch, "one bit per label is required");
    }
    std::size_t index = 0;
    for (int b : bits) {
        index = (index << 1) | static_cast<std::size_t>(b != 0);
    }
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    amps[index] = 1;
    return StateVector(std::move(amps), std::vector<QubitLabel>(labels.begin(), labels.end()));
}

StateVector tensor(const StateVector &left, const StateVector &right) {
    std::vector<Amplitude> amps(left.dimension() * right.dimension());
    for (std::size_t i = 0; i < left.dimension(); i++) {
        for (std::size_t j = 0; j < right.dimension(); j++) {
            amps[i * right.dimension() + j] = left.amplitude(i) * right.amplitude(j);
        }
    }
    std::vector<QubitLabel> labels = left.labels();
    labels.insert(labels.end(), right.labels().begin(), right.labels().end());
    return StateVector(std::move(amps), std::move(labels));
}

StateVector permute(const StateVector &state, std::span<const QubitLabel> order) {
    if (order.size() != state.qubit_count()) {
        throw Error(ErrorCode::LabelMismatch, "permutation must list every qubit exactly once");
    }
    std::size_t n = order.size();
    // old_shift[k] is the bit position in the old index of the qubit placed at new position k.
    std::vector<std::size_t> old_shift(n);
    for (std::size_t k = 0; k < n; k++) {
        if (!state.contains(order[k])) {
            throw Error(ErrorCode::LabelMismatch, "qubit '" + order[k].name + "' is not in the state");
        }
        old_shift[k] = state.shift_of(order[k]);
    }
    std::vector<Amplitude> amps(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); i++) {
        std::size_t j = 0;
        for (std::size_t k = 0; k < n; k++) {
            j = (j << 1) | ((i >> old_shift[k]) & 1);
        }
        amps[j] = state.amplitude(i);
    }
    return StateVector(std::move(amps), std::vector<QubitLabel>(order.begin(), order.end()));
}

StateVector discard_qubit(const StateVector &state, const QubitLabel &qubit, double tol) {
    std::size_t shift = state.shift_of(qubit);
    std::size_t half = state.dimension() / 2;
    std::vector<Amplitude> branch[2] = {std::vector<Amplitude>(half), std::vector<Amplitude>(half)};
    double weight[2] = {0, 0};
    for (std::size_t i = 0; i < state.dimension(); i++) {
        int bit = static_cast<int>((i >> shift) & 1);
        branch[bit][squeeze_bit(i, shift)] = state.amplitude(i);
        weight[bit] += std::norm(state.amplitude(i));
    }
    int major = weight[1] > weight[0] ? 1 : 0;
    std::vector<Amplitude> rest = branch[major];
    double n = std::sqrt(weight[major]);
    for (auto &a : rest) {
        a /= n;
    }
    // state = rest (x) (v0|0> + v1|1>) exactly iff each branch is parallel to rest.
    double residual = 0;
    for (int bit = 0; bit < 2; bit++) {
        Amplitude v = 0;
        for (std::size_t r = 0; r < half; r++) {
            v += std::conj(rest[r]) * branch[bit][r];
        }
        for (std::size_t r = 0; r < half; r++) {
            residual += std::norm(branch[bit][r] - v * rest[r]);
        }
    }
    if (std::sqrt(residual) > tol) {
        throw Error(ErrorCode::NotSeparable, "qubit '" + qubit.name + "' is entangled with the rest of the state");
    }
    return StateVector(std::move(rest), without(state.labels(), qubit));
}

StateVector apply_gate(const StateVector &state, const GateMatrix &gate, std::span<const QubitLabel> targets) {
    if (static_cast<int>(targets.size()) != gate.arity()) {
        throw Error(
            ErrorCode::ArityMismatch,
            "gate '" + gate.name() + "' takes " + std::to_string(gate.arity()) + " targets, got " +
                std::to_string(targets.size()));
    }
    const ComplexMatrix &g = gate.matrix();
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());

    if (gate.arity() == 1) {
        std::size_t bit = std::size_t{1} << state.shift_of(targets[0]);
        for (std::size_t i = 0; i < amps.size(); i++) {
            if (i & bit) {
                continue;
            }
            Amplitude a0 = amps[i];
            Amplitude a1 = amps[i | bit];
            amps[i] = g(0, 0) * a0 + g(0, 1) * a1;
            amps[i | bit] = g(1, 0) * a0 + g(1, 1) * a1;
        }
    } else {
        if (targets[0] == targets[1]) {
            throw Error(ErrorCode::ArityMismatch, "gate targets must be distinct");
        }
        std::size_t hi = std::size_t{1} << state.shift_of(targets[0]);
        std::size_t lo = std::size_t{1} << state.shift_of(targets[1]);
        for (std::size_t i = 0; i < amps.size(); i++) {
            if ((i & hi) || (i & lo)) {
                continue;
            }
            std::size_t idx[4] = {i, i | lo, i | hi, i | hi | lo};
            Amplitude in[4];
            for (int k = 0; k < 4; k++) {
                in[k] = amps[idx[k]];
            }
            for (int r = 0; r < 4; r++) {
                Amplitude acc = 0;
                for (int c = 0; c < 4; c++) {
                    acc += g(r, c) * in[c];
                }
                amps[idx[r]] = acc;
            }
        }
    }
    return StateVector(std::move(amps), state.labels());
}

MeasurementRecord project(const StateVector &state, const QubitLabel &qubit, int outcome) {
    std::size_t bit = std::size_t{1} << state.shift_of(qubit);
    std::size_t want = outcome ? bit : 0;
    std::vector<Amplitude> amps(state.dimension());
    double p = 0;
    for (std::size_t i = 0; i < amps.size(); i++) {
        if ((i & bit) == want) {
            amps[i] = state.amplitude(i);
            p += std::norm(amps[i]);
        }
    }
    if (p < kNegligibleProbability) {
        throw Error(ErrorCode::ZeroNorm, "outcome " + std::to_string(outcome) + " of qubit '" + qubit.name +
                                             "' has negligible probability");
    }
    return MeasurementRecord{qubit, outcome != 0 ? 1 : 0, p, StateVector(std::move(amps), state.labels())};
}

MeasurementRecord measure_projective(const StateVector &state, const QubitLabel &qubit, double draw) {
    if (!(draw >= 0 && draw < 1)) {
        throw Error(ErrorCode::BadDraw, "draw must lie in [0, 1)");
    }
    std::size_t bit = std::size_t{1} << state.shift_of(qubit);
    double p[2] = {0, 0};
    for (std::size_t i = 0; i < state.dimension(); i++) {
        p[(i & bit) ? 1 : 0] += std::norm(state.amplitude(i));
    }
    int outcome = draw < p[0] ? 0 : 1;
    if (p[outcome] < kNegligibleProbability) {
        outcome = 1 - outcome;
    }
    return project(state, qubit, outcome);
}

RankOneResult apply_rank_one_element(const StateVector &state, const QubitLabel &qubit, const PovmElement &element) {
    PovmElement::RankOne r1 = element.rank_one();
    std::size_t shift = state.shift_of(qubit);
    std::vector<Amplitude> rest(state.dimension() / 2);
    for (std::size_t i = 0; i < state.dimension(); i++) {
        int b = static_cast<int>((i >> shift) & 1);
        rest[squeeze_bit(i, shift)] += std::conj(r1.vector(b)) * state.amplitude(i);
    }
    double contracted = 0;
    for (const auto &a : rest) {
        contracted += std::norm(a);
    }
    RankOneResult out{r1.weight * contracted, std::nullopt};
    if (out.probability >= kNegligibleProbability) {
        out.post_state.emplace(std::move(rest), without(state.labels(), qubit));
    }
    return out;
}

std::vector<double> schmidt_spectrum(const StateVector &state, std::span<const QubitLabel> left) {
    std::size_t n = state.qubit_count();
    if (left.empty() || left.size() >= n) {
        throw Error(ErrorCode::BadPartition, "left block must be a nonempty proper subset of the qubits");
    }
    std::set<QubitLabel> left_set(left.begin(), left.end());
    if (left_set.size() != left.size()) {
        throw Error(ErrorCode::BadPartition, "left block lists a qubit twice");
    }
    std::vector<std::size_t> left_shifts;
    std::vector<std::size_t> right_shifts;
    for (const auto &l : left) {
        if (!state.contains(l)) {
            throw Error(ErrorCode::BadPartition, "qubit '" + l.name + "' is not in the state");
        }
        left_shifts.push_back(state.shift_of(l));
    }
    for (const auto &l : state.labels()) {
        if (!left_set.contains(l)) {
            right_shifts.push_back(state.shift_of(l));
        }
    }
    ComplexMatrix coeff = ComplexMatrix::Zero(
        static_cast<Eigen::Index>(1) << left_shifts.size(), static_cast<Eigen::Index>(1) << right_shifts.size());
    for (std::size_t i = 0; i < state.dimension(); i++) {
        Eigen::Index r = 0;
        Eigen::Index c = 0;
        for (auto s : left_shifts) {
            r = (r << 1) | static_cast<Eigen::Index>((i >> s) & 1);
        }
        for (auto s : right_shifts) {
            c = (c << 1) | static_cast<Eigen::Index>((i >> s) & 1);
        }
        coeff(r, c) = state.amplitude(i);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(coeff);
    const auto &sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double fidelity(const StateVector &s1, const StateVector &s2) {
    if (s1.qubit_count() != s2.qubit_count()) {
        throw Error(ErrorCode::LabelMismatch, "states cover different qubits");
    }
    for (const auto &l : s1.labels()) {
        if (!s2.contains(l)) {
            throw Error(ErrorCode::LabelMismatch, "qubit '" + l.name + "' is missing from the second state");
        }
    }
    StateVector aligned = permute(s2, s1.labels());
    Amplitude overlap = 0;
    for (std::size_t i = 0; i < s1.dimension(); i++) {
        overlap += std::conj(s1.amplitude(i)) * aligned.amplitude(i);
    }
    return std::min(1.0, std::norm(overlap));
}

bool gates_equal_up_to_phase(const GateMatrix &g1, const GateMatrix &g2, double tol) {
    if (g1.arity() != g2.arity()) {
        throw Error(ErrorCode::ArityMismatch, "gates act on different numbers of qubits");
    }
    return equal_up_to_phase(g1.matrix(), g2.matrix(), tol);
}

}  // namespace nlc
