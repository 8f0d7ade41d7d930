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

#include "nlcnot/session.h"

#include <cmath>
#include <sstream>
#include <utility>

#include "nlcnot/error.h"
#include "nlcnot/json_util.h"

namespace nlc {

std::string_view to_string(Party party) {
    return party == Party::A ? "A" : "B";
}

Party owner_of(const QubitLabel &label) {
    if (label == qubits::A || label == qubits::A1) {
        return Party::A;
    }
    if (label == qubits::B || label == qubits::B1 || label == qubits::B2) {
        return Party::B;
    }
    throw Error(ErrorCode::UnknownLabel, "qubit '" + label.name + "' is not on the roster");
}

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Prepare:
            return "prepare";
        case EventKind::Gate:
            return "gate";
        case EventKind::Measure:
            return "measure";
        case EventKind::ClassicalSend:
            return "classical-send";
        case EventKind::Memory:
            return "memory";
        case EventKind::Povm:
            return "povm";
        case EventKind::Abort:
            return "abort";
        case EventKind::Success:
            return "success";
    }
    return "unknown";
}

std::string_view to_string(Phase phase) {
    switch (phase) {
        case Phase::Fresh:
            return "fresh";
        case Phase::Swapped:
            return "swapped";
        case Phase::Corrected:
            return "corrected";
        case Phase::Completed:
            return "completed";
        case Phase::Aborted:
            return "aborted";
    }
    return "unknown";
}

ResourceLedger &ResourceLedger::operator+=(const ResourceLedger &other) {
    ebits_consumed += other.ebits_consumed;
    classical_bits_a_to_b += other.classical_bits_a_to_b;
    classical_bits_b_to_a += other.classical_bits_b_to_a;
    ancilla_qubits += other.ancilla_qubits;
    measurements += other.measurements;
    memory_bits += other.memory_bits;
    return *this;
}

std::ostream &operator<<(std::ostream &out, const ResourceLedger &ledger) {
    return out << "{ebits=" << ledger.ebits_consumed << " a->b=" << ledger.classical_bits_a_to_b
               << " b->a=" << ledger.classical_bits_b_to_a << " ancilla=" << ledger.ancilla_qubits
               << " measurements=" << ledger.measurements << " memory=" << ledger.memory_bits << "}";
}

namespace {

void tally(ResourceLedger &ledger, const TraceEvent &event) {
    switch (event.kind) {
        case EventKind::Prepare:
            if (event.operation == "ebit") {
                ledger.ebits_consumed++;
            } else if (event.operation == "ancilla") {
                ledger.ancilla_qubits++;
            }
            break;
        case EventKind::Measure:
        case EventKind::Povm:
            ledger.measurements++;
            break;
        case EventKind::ClassicalSend:
            if (event.party == Party::A) {
                ledger.classical_bits_a_to_b++;
            } else {
                ledger.classical_bits_b_to_a++;
            }
            break;
        case EventKind::Memory:
            ledger.memory_bits++;
            break;
        case EventKind::Gate:
        case EventKind::Abort:
        case EventKind::Success:
            break;
    }
}

QubitInput normalized_input(QubitInput in, const char *what) {
    double n2 = std::norm(in.zero) + std::norm(in.one);
    if (!std::isfinite(n2) || n2 == 0) {
        throw Error(ErrorCode::InvalidInput, std::string(what) + " qubit has zero or non-finite norm");
    }
    if (std::abs(n2 - 1) > 1e-9) {
        throw Error(ErrorCode::NotNormalized, std::string(what) + " qubit is not normalized");
    }
    double s = 1 / std::sqrt(n2);
    return QubitInput{in.zero * s, in.one * s};
}

}  // namespace

ResourceLedger ledger_from_trace(std::span<const TraceEvent> trace) {
    ResourceLedger ledger;
    for (const auto &e : trace) {
        tally(ledger, e);
    }
    return ledger;
}

std::size_t count_cross_party_gates(std::span<const TraceEvent> trace) {
    std::size_t n = 0;
    for (const auto &e : trace) {
        if (e.kind != EventKind::Gate || e.qubits.empty()) {
            continue;
        }
        Party first = owner_of(e.qubits.front());
        for (const auto &q : e.qubits) {
            if (owner_of(q) != first) {
                n++;
                break;
            }
        }
    }
    return n;
}

std::string trace_event_json(const TraceEvent &event, std::size_t sequence, std::optional<std::uint64_t> trial) {
    Json j;
    if (trial) {
        j["trial"] = *trial;
    }
    j["attempt"] = event.attempt;
    j["seq"] = sequence;
    j["kind"] = to_string(event.kind);
    j["step"] = event.step;
    j["party"] = to_string(event.party);
    Json qs = Json::array();
    for (const auto &q : event.qubits) {
        qs.push_back(q.name);
    }
    j["qubits"] = std::move(qs);
    j["op"] = event.operation;
    j["bit"] = event.bit ? Json(*event.bit) : Json(nullptr);
    j["probability"] = event.probability ? json_real(*event.probability) : Json(nullptr);
    j["to"] = event.receiver ? Json(to_string(*event.receiver)) : Json(nullptr);
    return j.dump();
}

void write_trace(std::ostream &out, std::span<const TraceEvent> trace, std::optional<std::uint64_t> trial) {
    for (std::size_t k = 0; k < trace.size(); k++) {
        out << trace_event_json(trace[k], k, trial) << '\n';
    }
}

Session::Session(QubitInput control, QubitInput target, const ChannelSpec &channel, std::uint32_t attempt)
    : channel_(channel),
      state_(tensor(
          tensor(
              StateVector({normalized_input(control, "control").zero, normalized_input(control, "control").one},
                          {qubits::A}),
              prepare_channel(channel)),
          StateVector({normalized_input(target, "target").zero, normalized_input(target, "target").one},
                      {qubits::B}))),
      attempt_(attempt) {
    record(TraceEvent{EventKind::Prepare, "init", Party::A, {qubits::A}, "input", {}, {}, {}, attempt_});
    record(TraceEvent{EventKind::Prepare, "init", Party::A, {qubits::A1, qubits::B1}, "ebit", {}, {}, {}, attempt_});
    record(TraceEvent{EventKind::Prepare, "init", Party::B, {qubits::B}, "input", {}, {}, {}, attempt_});
}

void Session::require_local(Party party, std::span<const QubitLabel> targets) const {
    for (const auto &q : targets) {
        if (owner_of(q) != party) {
            throw Error(
                ErrorCode::LocalityViolation,
                "party " + std::string(to_string(party)) + " cannot act on qubit '" + q.name + "'");
        }
        if (!state_.contains(q)) {
            throw Error(ErrorCode::UnknownLabel, "qubit '" + q.name + "' is not live");
        }
    }
}

void Session::record(TraceEvent event) {
    event.attempt = attempt_;
    tally(ledger_, event);
    trace_.push_back(std::move(event));
}

void Session::apply_local(Party party, const GateMatrix &gate, std::vector<QubitLabel> targets, std::string step) {
    require_local(party, targets);
    state_ = apply_gate(state_, gate, targets);
    record(TraceEvent{EventKind::Gate, std::move(step), party, std::move(targets), gate.name(), {}, {}, {}, attempt_});
}

MeasurementRecord Session::measure_local(Party party, const QubitLabel &qubit, double draw, std::string step) {
    QubitLabel target[1] = {qubit};
    require_local(party, target);
    MeasurementRecord rec = measure_projective(state_, qubit, draw);
    state_ = rec.post_state;
    memory_[index(party)] = rec.outcome;
    record(TraceEvent{EventKind::Measure, std::move(step), party, {qubit}, "Z", rec.outcome, rec.probability, {},
                      attempt_});
    return rec;
}

MeasurementRecord Session::measure_local_in_basis(
    Party party,
    const QubitLabel &qubit,
    const Eigen::Vector2cd &basis0,
    const Eigen::Vector2cd &basis1,
    double draw,
    std::string step) {
    QubitLabel target[1] = {qubit};
    require_local(party, target);
    StateVector rotated = apply_gate(state_, gates::basis_change(basis0, basis1), target);
    MeasurementRecord rec = measure_projective(rotated, qubit, draw);
    state_ = rec.post_state;
    memory_[index(party)] = rec.outcome;
    record(TraceEvent{EventKind::Measure, std::move(step), party, {qubit}, "basis", rec.outcome, rec.probability, {},
                      attempt_});
    return rec;
}

Session::PovmResult Session::povm_local(
    Party party, const QubitLabel &qubit, const PovmElement &success, double draw, std::string step) {
    if (!(draw >= 0 && draw < 1)) {
        throw Error(ErrorCode::BadDraw, "draw must lie in [0, 1)");
    }
    QubitLabel target[1] = {qubit};
    require_local(party, target);
    RankOneResult r = apply_rank_one_element(state_, qubit, success);
    bool ok = draw < r.probability && r.post_state.has_value();
    if (ok) {
        state_ = *r.post_state;
    }
    memory_[index(party)] = ok ? 1 : 0;
    record(TraceEvent{EventKind::Povm, std::move(step), party, {qubit}, "povm", ok ? 1 : 0,
                      ok ? r.probability : 1 - r.probability, {}, attempt_});
    return PovmResult{ok, r.probability};
}

void Session::send_bit(Party from, Party to, int bit, std::string step) {
    if (from == to) {
        throw Error(ErrorCode::SelfSend, "a party cannot send a bit to itself");
    }
    memory_[index(to)] = bit;
    record(TraceEvent{EventKind::ClassicalSend, std::move(step), from, {}, "bit", bit, {}, to, attempt_});
}

void Session::hold_bit(Party party, std::string step) {
    record(TraceEvent{EventKind::Memory, std::move(step), party, {}, "hold", memory_[index(party)], {}, {},
                      attempt_});
}

void Session::allocate_ancilla(Party party, const QubitLabel &qubit, std::string step) {
    if (owner_of(qubit) != party) {
        throw Error(
            ErrorCode::LocalityViolation,
            "party " + std::string(to_string(party)) + " cannot allocate qubit '" + qubit.name + "'");
    }
    if (state_.contains(qubit)) {
        throw Error(ErrorCode::DuplicateLabel, "qubit '" + qubit.name + "' is already live");
    }
    state_ = tensor(state_, StateVector({1, 0}, {qubit}));
    record(TraceEvent{EventKind::Prepare, std::move(step), party, {qubit}, "ancilla", {}, {}, {}, attempt_});
}

void Session::discard(const QubitLabel &qubit) {
    state_ = discard_qubit(state_, qubit);
}

void Session::mark(EventKind kind, Party party, std::string step) {
    record(TraceEvent{kind, std::move(step), party, {}, std::string(to_string(kind)), {}, {}, {}, attempt_});
}

}  // namespace nlc
