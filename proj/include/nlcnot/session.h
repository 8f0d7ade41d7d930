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

#ifndef NLCNOT_SESSION_H
#define NLCNOT_SESSION_H

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlcnot/channel.h"
#include "nlcnot/gate.h"
#include "nlcnot/povm_element.h"
#include "nlcnot/state_vector.h"

namespace nlc {

enum class Party { A, B };

std::string_view to_string(Party party);

/// Owner of a roster qubit. Throws UnknownLabel for names outside the roster.
Party owner_of(const QubitLabel &label);

/// Amplitudes of a single-qubit input c0|0> + c1|1>.
struct QubitInput {
    Amplitude zero;
    Amplitude one;
};

enum class EventKind { Prepare, Gate, Measure, ClassicalSend, Memory, Povm, Abort, Success };

std::string_view to_string(EventKind kind);

struct TraceEvent {
    EventKind kind;
    std::string step;
    Party party;
    std::vector<QubitLabel> qubits;
    /// Gate name, prepared resource ("input", "ebit", "ancilla") or measurement basis.
    std::string operation;
    std::optional<int> bit;
    std::optional<double> probability;
    std::optional<Party> receiver;
    std::uint32_t attempt = 1;
};

struct ResourceLedger {
    std::uint64_t ebits_consumed = 0;
    std::uint64_t classical_bits_a_to_b = 0;
    std::uint64_t classical_bits_b_to_a = 0;
    std::uint64_t ancilla_qubits = 0;
    std::uint64_t measurements = 0;
    std::uint64_t memory_bits = 0;

    bool operator==(const ResourceLedger &) const = default;
    ResourceLedger &operator+=(const ResourceLedger &other);
};

std::ostream &operator<<(std::ostream &out, const ResourceLedger &ledger);

/// Recomputes the ledger from an event log.
ResourceLedger ledger_from_trace(std::span<const TraceEvent> trace);

/// Number of gate events touching qubits owned by more than one party.
std::size_t count_cross_party_gates(std::span<const TraceEvent> trace);

/// One JSON object per line, fixed key order. `trial` is emitted first when
/// the event comes from a multi-trial experiment.
std::string trace_event_json(
    const TraceEvent &event, std::size_t sequence, std::optional<std::uint64_t> trial = std::nullopt);
void write_trace(
    std::ostream &out, std::span<const TraceEvent> trace, std::optional<std::uint64_t> trial = std::nullopt);

/// Protocol stage reached by a session.
enum class Phase { Fresh, Swapped, Corrected, Completed, Aborted };

std::string_view to_string(Phase phase);

/// Two-party world for one attempt of the nonlocal gate. Quantum operations
/// are accepted only when every touched qubit belongs to the acting party;
/// only classical bits cross between parties. Every operation is logged to
/// the trace and the ledger is kept in step with it.
class Session {
   public:
    /// |control>_A (x) (alpha|00> + beta|11>)_{A1 B1} (x) |target>_B.
    /// Inputs within 1e-9 of unit norm are renormalized; zero inputs throw
    /// InvalidInput and others NotNormalized.
    Session(QubitInput control, QubitInput target, const ChannelSpec &channel, std::uint32_t attempt = 1);

    const StateVector &state() const noexcept {
        return state_;
    }
    const std::vector<TraceEvent> &trace() const noexcept {
        return trace_;
    }
    const ResourceLedger &ledger() const noexcept {
        return ledger_;
    }
    const ChannelSpec &channel() const noexcept {
        return channel_;
    }
    std::optional<int> memory(Party party) const noexcept {
        return memory_[index(party)];
    }
    Phase phase() const noexcept {
        return phase_;
    }
    void set_phase(Phase phase) noexcept {
        phase_ = phase;
    }
    std::uint32_t attempt() const noexcept {
        return attempt_;
    }

    /// Throws LocalityViolation if a target belongs to the other party.
    void apply_local(Party party, const GateMatrix &gate, std::vector<QubitLabel> targets, std::string step);

    /// Computational-basis measurement; the outcome lands in the party's memory.
    MeasurementRecord measure_local(Party party, const QubitLabel &qubit, double draw, std::string step);

    /// Projective measurement in an orthonormal basis; outcome 0 is `basis0`.
    /// The measured qubit is left in |outcome> of the rotated frame.
    MeasurementRecord measure_local_in_basis(
        Party party,
        const QubitLabel &qubit,
        const Eigen::Vector2cd &basis0,
        const Eigen::Vector2cd &basis1,
        double draw,
        std::string step);

    struct PovmResult {
        bool succeeded;
        /// <psi|S|psi> for the success element.
        double success_probability;
    };
    /// Two-outcome measurement {S, 1 - S} with rank-one S. On success the
    /// measured qubit is removed and the rest collapses per the rank-one rule;
    /// on failure the state is left untouched and the attempt is over.
    PovmResult povm_local(Party party, const QubitLabel &qubit, const PovmElement &success, double draw, std::string step);

    /// Throws SelfSend when from == to.
    void send_bit(Party from, Party to, int bit, std::string step);

    /// Keeps the party's current memory bit for a later stage.
    void hold_bit(Party party, std::string step);

    /// Adds `qubit` in |0>. Throws LocalityViolation or DuplicateLabel.
    void allocate_ancilla(Party party, const QubitLabel &qubit, std::string step);

    /// Removes a qubit that is no longer entangled with the rest.
    void discard(const QubitLabel &qubit);

    void mark(EventKind kind, Party party, std::string step);

   private:
    static std::size_t index(Party party) noexcept {
        return party == Party::A ? 0 : 1;
    }
    void require_local(Party party, std::span<const QubitLabel> targets) const;
    void record(TraceEvent event);

    ChannelSpec channel_;
    StateVector state_;
    std::vector<TraceEvent> trace_;
    ResourceLedger ledger_;
    std::array<std::optional<int>, 2> memory_;
    Phase phase_ = Phase::Fresh;
    std::uint32_t attempt_;
};

}  // namespace nlc

#endif
