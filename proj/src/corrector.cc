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

#include "nlcnot/corrector.h"

#include <cmath>
#include <utility>

#include "nlcnot/error.h"

namespace nlc {

std::string_view to_string(CorrectorKind kind) {
    switch (kind) {
        case CorrectorKind::Cuo:
            return "cuo";
        case CorrectorKind::PovmLiteral:
            return "povm";
        case CorrectorKind::Orthogonal:
            return "orth";
    }
    return "unknown";
}

CorrectorKind parse_corrector_kind(std::string_view text) {
    if (text == "cuo") {
        return CorrectorKind::Cuo;
    }
    if (text == "povm" || text == "povm_literal") {
        return CorrectorKind::PovmLiteral;
    }
    if (text == "orth" || text == "orthogonal") {
        return CorrectorKind::Orthogonal;
    }
    throw Error(ErrorCode::InvalidInput, "unknown corrector '" + std::string(text) + "'");
}

namespace {

void require_bit(int m) {
    if (m != 0 && m != 1) {
        throw Error(ErrorCode::InvalidInput, "measurement outcome must be 0 or 1");
    }
}

void require_angle(double theta) {
    if (!(theta >= 0 && theta < M_PI / 2)) {
        throw Error(ErrorCode::InvalidChannel, "theta must lie in [0, pi/2)");
    }
}

ComplexMatrix swap_matrix() {
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1;
    return s;
}

}  // namespace

ComplexMatrix corrector_unitary_literal(int m, double theta) {
    require_bit(m);
    double c = std::cos(theta);
    double s = std::sin(theta);
    ComplexMatrix u(4, 4);
    if (m == 0) {
        u << c, s, 0, 0,  //
            0, 0, 0, 1,   //
            0, 0, 1, 0,   //
            -s, c, 0, 0;
    } else {
        u << 1, 0, 0, 0,  //
            0, 0, -s, c,  //
            0, 0, c, s,   //
            0, 1, 0, 1;
    }
    return u;
}

GateMatrix corrector_unitary(int m, double theta) {
    require_bit(m);
    require_angle(theta);
    ComplexMatrix u = corrector_unitary_literal(m, theta);
    if (m == 1) {
        u(3, 3) = 0;
    }
    return GateMatrix(std::move(u), m == 0 ? "U0" : "U1");
}

GateMatrix controlled_rotation(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    ComplexMatrix u = ComplexMatrix::Identity(4, 4);
    u(2, 2) = c;
    u(2, 3) = -s;
    u(3, 2) = s;
    u(3, 3) = c;
    return GateMatrix(std::move(u), "CU");
}

ComplexMatrix compose_on_b1_b2(const std::vector<CorrectorStep> &steps) {
    ComplexMatrix total = ComplexMatrix::Identity(4, 4);
    for (const auto &step : steps) {
        ComplexMatrix g;
        if (step.gate.arity() == 1) {
            if (step.targets.at(0) == qubits::B1) {
                g = gates::on_first(step.gate.matrix());
            } else if (step.targets.at(0) == qubits::B2) {
                g = gates::on_second(step.gate.matrix());
            } else {
                throw Error(ErrorCode::UnknownLabel, "corrector steps act on B1 and B2 only");
            }
        } else if (step.targets.at(0) == qubits::B1 && step.targets.at(1) == qubits::B2) {
            g = step.gate.matrix();
        } else if (step.targets.at(0) == qubits::B2 && step.targets.at(1) == qubits::B1) {
            ComplexMatrix sw = swap_matrix();
            g = sw * step.gate.matrix() * sw;
        } else {
            throw Error(ErrorCode::UnknownLabel, "corrector steps act on B1 and B2 only");
        }
        total = g * total;
    }
    return total;
}

std::vector<CorrectorStep> corrector_decomposition(int m, double theta) {
    require_bit(m);
    require_angle(theta);
    std::vector<CorrectorStep> steps;
    auto flip = [&]() {
        steps.push_back(CorrectorStep{CorrectorStep::Kind::ConditionedX, gates::pauli_x(), {qubits::B1}});
    };
    if (m == 0) {
        flip();
    }
    steps.push_back(CorrectorStep{CorrectorStep::Kind::ControlledU, controlled_rotation(-theta), {qubits::B1, qubits::B2}});
    steps.push_back(CorrectorStep{CorrectorStep::Kind::Cnot, gates::cnot(), {qubits::B2, qubits::B1}});
    if (m == 0) {
        flip();
    }
    if (!equal_up_to_phase(compose_on_b1_b2(steps), corrector_unitary(m, theta).matrix(), kDecompositionTol)) {
        throw Error(ErrorCode::DecompositionNotFound, "corrector circuit does not reproduce U_m");
    }
    return steps;
}

PovmPair povm_pair(int m, const ChannelSpec &spec) {
    require_bit(m);
    double a = spec.alpha();
    double b = spec.beta();
    Eigen::Vector2cd psi = m == 0 ? Eigen::Vector2cd(b, a) : Eigen::Vector2cd(a, b);
    Eigen::Vector2cd phi = m == 0 ? Eigen::Vector2cd(a, -b) : Eigen::Vector2cd(b, -a);
    Eigen::Matrix2cd s = psi * psi.adjoint() / (a * a);
    Eigen::Matrix2cd f = Eigen::Matrix2cd::Identity() - s;
    return PovmPair{PovmElement(s, PovmLabel::Success), PovmElement(f, PovmLabel::Failure), m, psi, phi};
}

CorrectorOutcome run_corrector(Session &session, int m, CorrectorKind kind, double draw) {
    require_bit(m);
    if (session.phase() != Phase::Swapped) {
        throw Error(
            ErrorCode::BadPhase,
            "corrector needs a session right after the ES unit, not '" + std::string(to_string(session.phase())) +
                "'");
    }
    const ChannelSpec &spec = session.channel();

    session.hold_bit(Party::B, "corrector: hold m");
    session.allocate_ancilla(Party::B, qubits::B2, "corrector: ancilla");

    bool ok = false;
    double p_success = 0;
    switch (kind) {
        case CorrectorKind::Cuo: {
            session.apply_local(Party::B, corrector_unitary(m, spec.theta()), {qubits::B1, qubits::B2}, "corrector: U_m");
            MeasurementRecord rec = session.measure_local(Party::B, qubits::B2, draw, "corrector: measure B2");
            ok = rec.outcome == 0;
            p_success = ok ? rec.probability : 1 - rec.probability;
            session.discard(qubits::B2);
            break;
        }
        case CorrectorKind::PovmLiteral: {
            session.apply_local(Party::B, gates::cnot(), {qubits::B1, qubits::B2}, "corrector: CNOT B1->B2");
            PovmPair pair = povm_pair(m, spec);
            Session::PovmResult res =
                session.povm_local(Party::B, qubits::B2, pair.success, draw, "corrector: POVM on B2");
            ok = res.succeeded;
            p_success = res.success_probability;
            break;
        }
        case CorrectorKind::Orthogonal: {
            session.apply_local(Party::B, gates::cnot(), {qubits::B1, qubits::B2}, "corrector: CNOT B1->B2");
            PovmPair pair = povm_pair(m, spec);
            MeasurementRecord rec = session.measure_local_in_basis(
                Party::B, qubits::B2, pair.psi, pair.phi, draw, "corrector: measure B2 in {psi, phi}");
            ok = rec.outcome == 0;
            p_success = ok ? rec.probability : 1 - rec.probability;
            session.discard(qubits::B2);
            break;
        }
    }

    session.send_bit(Party::B, Party::A, ok ? 1 : 0, "corrector: notify");
    if (!ok) {
        session.mark(EventKind::Abort, Party::B, "corrector: failed");
        session.set_phase(Phase::Aborted);
        return CorrectorOutcome{false, p_success, std::nullopt};
    }
    session.set_phase(Phase::Corrected);
    return CorrectorOutcome{true, p_success, session.state()};
}

}  // namespace nlc
