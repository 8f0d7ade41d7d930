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

#include "nlcnot/protocol.h"

#include <utility>

namespace nlc {

EsOutcome es_unit(Session &session, double draw) {
    if (session.phase() != Phase::Fresh) {
        throw Error(ErrorCode::BadPhase, "ES unit needs a fresh session");
    }
    session.apply_local(Party::A, gates::cnot(), {qubits::A, qubits::A1}, "es: CNOT A->A1");
    MeasurementRecord rec = session.measure_local(Party::A, qubits::A1, draw, "es: measure A1");
    session.send_bit(Party::A, Party::B, rec.outcome, "es: send m");
    if (rec.outcome == 1) {
        session.apply_local(Party::B, gates::pauli_x(), {qubits::B1}, "es: flip B1");
    }
    session.discard(qubits::A1);
    session.set_phase(Phase::Swapped);
    return EsOutcome{rec.outcome, rec.probability};
}

EcOutcome ec_unit(Session &session, double draw) {
    if (session.phase() != Phase::Swapped && session.phase() != Phase::Corrected) {
        throw Error(ErrorCode::BadPhase, "EC unit needs a control e-bit");
    }
    session.apply_local(Party::B, gates::cnot(), {qubits::B1, qubits::B}, "ec: CNOT B1->B");
    session.apply_local(Party::B, gates::hadamard(), {qubits::B1}, "ec: H on B1");
    MeasurementRecord rec = session.measure_local(Party::B, qubits::B1, draw, "ec: measure B1");
    session.send_bit(Party::B, Party::A, rec.outcome, "ec: send bit");
    if (rec.outcome == 1) {
        session.apply_local(Party::A, gates::pauli_z(), {qubits::A}, "ec: Z on A");
    }
    session.discard(qubits::B1);
    session.set_phase(Phase::Completed);
    return EcOutcome{rec.outcome, rec.probability};
}

StateVector direct_cnot(QubitInput control, QubitInput target) {
    Amplitude a = control.zero;
    Amplitude b = control.one;
    Amplitude c = target.zero;
    Amplitude d = target.one;
    return StateVector({a * c, a * d, b * d, b * c}, {qubits::A, qubits::B});
}

StateVector control_ebit(QubitInput control) {
    return StateVector({control.zero, 0, 0, control.one}, {qubits::A, qubits::B1});
}

MaxAttemptsExceeded::MaxAttemptsExceeded(RunResult result)
    : Error(ErrorCode::MaxAttemptsExceeded,
            "no success after " + std::to_string(result.attempts) + " attempts"),
      result_(std::move(result)) {
}

RunResult run_nonlocal_cnot(const GateConfig &config, DrawStream &draws) {
    if (config.max_attempts < 1) {
        throw Error(ErrorCode::InvalidInput, "max_attempts must be at least 1");
    }
    RunResult result;
    bool perfect = config.channel.is_perfect();
    for (std::uint32_t attempt = 1; attempt <= config.max_attempts; attempt++) {
        Session session(config.control, config.target, config.channel, attempt);
        EsOutcome es = es_unit(session, draws.next());
        AttemptRecord rec{es.m, es.probability, std::nullopt, std::nullopt, {}};
        result.attempts = attempt;
        result.es_outcome_bits.push_back(es.m);

        bool proceed = true;
        if (!perfect) {
            CorrectorOutcome corr = run_corrector(session, es.m, config.corrector, draws.next());
            rec.corrector_succeeded = corr.succeeded;
            rec.corrector_probability = corr.probability;
            proceed = corr.succeeded;
        }
        if (proceed) {
            ec_unit(session, draws.next());
            session.mark(EventKind::Success, Party::A, "gate complete");
            result.succeeded = true;
            result.final_state = session.state();
        }

        rec.ledger = session.ledger();
        result.ledger += session.ledger();
        result.trace.insert(result.trace.end(), session.trace().begin(), session.trace().end());
        result.attempt_records.push_back(std::move(rec));
        if (result.succeeded) {
            break;
        }
    }
    return result;
}

RunResult nonlocal_cnot(const GateConfig &config, DrawStream &draws) {
    RunResult result = run_nonlocal_cnot(config, draws);
    if (!result.succeeded) {
        throw MaxAttemptsExceeded(std::move(result));
    }
    return result;
}

namespace {

// Extreme draws pick a definite branch: 0 selects outcome 0 (or success)
// whenever it has non-negligible weight, the largest double below 1 selects
// outcome 1.
constexpr double kFirstBranch = 0.0;
const double kSecondBranch = std::nextafter(1.0, 0.0);

}  // namespace

BranchPropagation propagate_branches(const GateConfig &config) {
    BranchPropagation out{};
    StateVector target_state({config.target.zero, config.target.one}, {qubits::B});
    StateVector wanted_ebit = tensor(control_ebit(config.control), target_state);
    StateVector wanted_gate = direct_cnot(config.control, config.target);

    for (int m = 0; m < 2; m++) {
        BranchReport &br = out.branches[m];
        br = BranchReport{m, false, 0, 0, 0, 0, 0};
        Session session(config.control, config.target, config.channel);
        EsOutcome es = es_unit(session, m == 0 ? kFirstBranch : kSecondBranch);
        if (es.m != m) {
            continue;
        }
        br.reachable = true;
        br.es_probability = es.probability;
        if (config.channel.is_perfect()) {
            br.conditional_success = 1;
        } else {
            CorrectorOutcome corr = run_corrector(session, m, config.corrector, kFirstBranch);
            br.conditional_success = corr.probability;
            if (!corr.succeeded) {
                continue;
            }
        }
        br.joint_success = br.es_probability * br.conditional_success;
        br.control_ebit_fidelity = fidelity(session.state(), wanted_ebit);
        ec_unit(session, kFirstBranch);
        br.gate_fidelity = fidelity(session.state(), wanted_gate);
    }
    out.total_success = out.branches[0].joint_success + out.branches[1].joint_success;
    return out;
}

}  // namespace nlc
