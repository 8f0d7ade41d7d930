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

#include <cmath>
#include <functional>
#include <random>

#include "gtest/gtest.h"

#include "nlcnot/analysis.h"
#include "oracle.h"

using namespace nlc;
using qubits::A;
using qubits::A1;
using qubits::B;
using qubits::B1;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an nlc::Error";
    return ErrorCode::InvalidInput;
}

const double kHigh = std::nextafter(1.0, 0.0);

QubitInput random_input(std::mt19937_64 &rng) {
    Amplitude x = oracle::random_complex(rng);
    Amplitude y = oracle::random_complex(rng);
    double n = std::sqrt(std::norm(x) + std::norm(y));
    return QubitInput{x / n, y / n};
}

// c|0> + d|1> on B controlled by a|0> + b|1> on A, expanded by hand.
StateVector cnot_oracle(QubitInput ctl, QubitInput tgt) {
    Amplitude a = ctl.zero, b = ctl.one, c = tgt.zero, d = tgt.one;
    return StateVector({a * c, a * d, b * d, b * c}, {A, B});
}

}  // namespace

TEST(protocol, prepare_channel) {
    StateVector e = prepare_channel(ChannelSpec::perfect());
    ASSERT_NEAR(e.amplitude(0).real(), M_SQRT1_2, 1e-15);
    ASSERT_NEAR(e.amplitude(3).real(), M_SQRT1_2, 1e-15);
    StateVector p = prepare_channel(ChannelSpec::from_alpha(0.8));
    std::vector<QubitLabel> labels{A1, B1};
    ASSERT_EQ(p.labels(), labels);
    ASSERT_NEAR(p.amplitude(0).real(), 0.8, 1e-15);
    ASSERT_NEAR(p.amplitude(3).real(), 0.6, 1e-15);
    ASSERT_EQ(std::abs(p.amplitude(1)), 0);
    ASSERT_THROW(ChannelSpec::from_alpha(0.6), Error);
    ASSERT_THROW(ChannelSpec::from_alpha(1.0), Error);
}

TEST(protocol, es_unit_perfect) {
    Session s(QubitInput{M_SQRT1_2, M_SQRT1_2}, QubitInput{1, 0}, ChannelSpec::perfect());
    EsOutcome out = es_unit(s, 0.2);
    ASSERT_EQ(out.m, 0);
    ASSERT_FALSE(s.state().contains(A1));
    ASSERT_EQ(s.phase(), Phase::Swapped);
    StateVector bell({M_SQRT1_2, 0, 0, M_SQRT1_2}, {A, B1});
    ASSERT_NEAR(fidelity(discard_qubit(s.state(), B), bell), 1, 1e-12);
    ASSERT_EQ(s.ledger().classical_bits_a_to_b, 1u);
}

TEST(protocol, es_unit_partial_branches) {
    double a = std::sqrt(0.9);
    double b = std::sqrt(0.1);
    Session s0(QubitInput{a, b}, QubitInput{1, 0}, ChannelSpec::from_alpha(0.8));
    EsOutcome o0 = es_unit(s0, 0.0);
    ASSERT_EQ(o0.m, 0);
    ASSERT_NEAR(o0.probability, 0.612, 1e-12);
    StateVector t0({a * 0.8 / std::sqrt(0.612), 0, 0, b * 0.6 / std::sqrt(0.612)}, {A, B1});
    ASSERT_NEAR(fidelity(discard_qubit(s0.state(), B), t0), 1, 1e-12);

    Session s1(QubitInput{a, b}, QubitInput{1, 0}, ChannelSpec::from_alpha(0.8));
    EsOutcome o1 = es_unit(s1, 0.99);
    ASSERT_EQ(o1.m, 1);
    ASSERT_NEAR(o1.probability, 0.388, 1e-12);
    StateVector t1({a * 0.6, 0, 0, b * 0.8}, {A, B1});
    ASSERT_NEAR(fidelity(discard_qubit(s1.state(), B), t1), 1, 1e-12);
    ASSERT_EQ(code_of([&] { es_unit(s1, 0.1); }), ErrorCode::BadPhase);
}

TEST(protocol, ec_unit_examples) {
    Session s(QubitInput{M_SQRT1_2, M_SQRT1_2}, QubitInput{1, 0}, ChannelSpec::perfect());
    ASSERT_EQ(code_of([&] { ec_unit(s, 0.1); }), ErrorCode::BadPhase);
    es_unit(s, 0.2);
    ec_unit(s, 0.1);
    ASSERT_EQ(s.phase(), Phase::Completed);
    ASSERT_NEAR(fidelity(s.state(), StateVector({M_SQRT1_2, 0, 0, M_SQRT1_2}, {A, B})), 1, 1e-12);

    std::mt19937_64 rng(6);
    QubitInput tgt = random_input(rng);
    Session z(QubitInput{1, 0}, tgt, ChannelSpec::perfect());
    es_unit(z, 0.5);
    ec_unit(z, 0.5);
    ASSERT_NEAR(fidelity(z.state(), StateVector({tgt.zero, tgt.one, 0, 0}, {A, B})), 1, 1e-12);
}

TEST(protocol, ec_branch_independence) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; trial++) {
        QubitInput ctl = random_input(rng);
        QubitInput tgt = random_input(rng);
        Session lo(ctl, tgt, ChannelSpec::perfect());
        Session hi(ctl, tgt, ChannelSpec::perfect());
        es_unit(lo, 0.0);
        es_unit(hi, 0.0);
        EcOutcome l = ec_unit(lo, 0.0);
        EcOutcome h = ec_unit(hi, kHigh);
        ASSERT_EQ(l.bit, 0);
        ASSERT_EQ(h.bit, 1);
        ASSERT_NEAR(fidelity(lo.state(), hi.state()), 1, 1e-12);
        ASSERT_NEAR(fidelity(lo.state(), cnot_oracle(ctl, tgt)), 1, 1e-12);
    }
}

TEST(protocol, direct_cnot_matches_dense_gate) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; trial++) {
        QubitInput ctl = random_input(rng);
        QubitInput tgt = random_input(rng);
        StateVector d = direct_cnot(ctl, tgt);
        StateVector in({ctl.zero * tgt.zero, ctl.zero * tgt.one, ctl.one * tgt.zero, ctl.one * tgt.one}, {A, B});
        Eigen::VectorXcd want = oracle::embed(gates::cnot().matrix(), {0, 1}, 2) * oracle::as_vector(in);
        ASSERT_LT((oracle::as_vector(d) - want).norm(), 1e-12);
        ASSERT_NEAR(fidelity(d, cnot_oracle(ctl, tgt)), 1, 1e-12);
    }
}

TEST(protocol, perfect_channel_run) {
    GateConfig cfg;
    ScriptedDraws draws({0.3, 0.7});
    RunResult r = nonlocal_cnot(cfg, draws);
    ASSERT_TRUE(r.succeeded);
    ASSERT_EQ(r.attempts, 1u);
    ASSERT_EQ(draws.consumed(), 2u);
    for (const auto &e : r.trace) {
        ASSERT_EQ(e.step.find("corrector"), std::string::npos) << e.step;
        ASSERT_NE(e.kind, EventKind::Povm);
    }
    ResourceLedger want;
    want.ebits_consumed = 1;
    want.classical_bits_a_to_b = 1;
    want.classical_bits_b_to_a = 1;
    want.measurements = 2;
    ASSERT_EQ(r.ledger, want);
    ASSERT_EQ(r.trace.back().kind, EventKind::Success);
}

TEST(protocol, random_inputs_end_to_end_all_kinds) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0, 1);
    for (CorrectorKind kind : {CorrectorKind::Cuo, CorrectorKind::PovmLiteral, CorrectorKind::Orthogonal}) {
        for (int trial = 0; trial < 100; trial++) {
            GateConfig cfg;
            cfg.control = random_input(rng);
            cfg.target = random_input(rng);
            cfg.channel = trial % 5 == 0 ? ChannelSpec::perfect() : ChannelSpec::from_alpha(M_SQRT1_2 + 0.29 * u(rng));
            cfg.corrector = kind;
            cfg.max_attempts = 1000;
            SeededDraws draws(99, static_cast<std::uint64_t>(trial));
            RunResult r = nonlocal_cnot(cfg, draws);
            ASSERT_TRUE(r.succeeded);
            ASSERT_NEAR(fidelity(*r.final_state, cnot_oracle(cfg.control, cfg.target)), 1, 1e-12);
            ASSERT_EQ(count_cross_party_gates(r.trace), 0u);
            ASSERT_EQ(ledger_from_trace(r.trace), r.ledger);
            ResourceLedger sum;
            for (const auto &rec : r.attempt_records) {
                sum += rec.ledger;
            }
            ASSERT_EQ(sum, r.ledger);
            ASSERT_EQ(r.attempt_records.size(), r.attempts);
            ASSERT_EQ(r.es_outcome_bits.size(), r.attempts);
            ASSERT_EQ(r.ledger.ebits_consumed, r.attempts);
        }
    }
}

TEST(protocol, partial_channel_bell_output) {
    GateConfig cfg;
    cfg.channel = ChannelSpec::from_alpha(0.8);
    for (int m = 0; m < 2; m++) {
        ScriptedDraws draws({m == 0 ? 0.0 : kHigh, 0.0, 0.4});
        RunResult r = nonlocal_cnot(cfg, draws);
        ASSERT_TRUE(r.succeeded);
        ASSERT_EQ(r.attempts, 1u);
        std::vector<QubitLabel> left{A};
        auto sv = schmidt_spectrum(*r.final_state, left);
        ASSERT_NEAR(sv[0], M_SQRT1_2, 1e-12);
        ASSERT_NEAR(sv[1], M_SQRT1_2, 1e-12);
        const ResourceLedger &l = r.attempt_records[0].ledger;
        ASSERT_EQ(l.ebits_consumed, 1u);
        ASSERT_EQ(l.classical_bits_a_to_b, 1u);
        ASSERT_EQ(l.classical_bits_b_to_a, 2u);
        ASSERT_EQ(l.ancilla_qubits, 1u);
        ASSERT_EQ(l.measurements, 3u);
        ASSERT_EQ(l.memory_bits, 1u);
    }
}

TEST(protocol, forced_failure_exhausts_attempts) {
    GateConfig cfg;
    cfg.channel = ChannelSpec::from_alpha(0.8);
    cfg.max_attempts = 5;
    std::vector<double> script;
    for (int k = 0; k < 5; k++) {
        script.push_back(0.0);
        script.push_back(kHigh);
    }
    ScriptedDraws draws(script);
    try {
        nonlocal_cnot(cfg, draws);
        FAIL() << "expected MaxAttemptsExceeded";
    } catch (const MaxAttemptsExceeded &e) {
        ASSERT_EQ(e.code(), ErrorCode::MaxAttemptsExceeded);
        ASSERT_EQ(e.result().attempts, 5u);
        ASSERT_FALSE(e.result().succeeded);
        ASSERT_FALSE(e.result().final_state.has_value());
        ASSERT_EQ(e.result().ledger.ebits_consumed, 5u);
        ASSERT_EQ(e.result().ledger.classical_bits_b_to_a, 5u);
        for (const auto &rec : e.result().attempt_records) {
            ASSERT_EQ(rec.corrector_succeeded, false);
        }
    }
    ScriptedDraws again(script);
    RunResult r = run_nonlocal_cnot(cfg, again);
    ASSERT_FALSE(r.succeeded);
    ASSERT_EQ(r.attempts, 5u);
}

TEST(protocol, draws_exhausted) {
    GateConfig cfg;
    ScriptedDraws draws({0.1});
    ASSERT_EQ(code_of([&] { nonlocal_cnot(cfg, draws); }), ErrorCode::DrawsExhausted);
}

TEST(protocol, seeded_draws_reproducible) {
    SeededDraws a(7, 3);
    SeededDraws b(7, 3);
    SeededDraws c(7, 4);
    bool differs = false;
    for (int k = 0; k < 100; k++) {
        double x = a.next();
        ASSERT_EQ(x, b.next());
        ASSERT_GE(x, 0);
        ASSERT_LT(x, 1);
        differs |= x != c.next();
    }
    ASSERT_TRUE(differs);
}

TEST(protocol, branch_propagation_matches_closed_forms) {
    for (CorrectorKind kind : {CorrectorKind::Cuo, CorrectorKind::PovmLiteral, CorrectorKind::Orthogonal}) {
        for (int ia = 0; ia <= 10; ia++) {
            double a2 = ia / 10.0;
            for (double alpha2 : {0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
                GateConfig cfg;
                cfg.control = QubitInput{std::sqrt(a2), std::sqrt(1 - a2)};
                cfg.channel = ChannelSpec::from_alpha(std::sqrt(alpha2));
                cfg.corrector = kind;
                BranchPropagation bp = propagate_branches(cfg);
                double alpha = cfg.channel.alpha();
                double beta = cfg.channel.beta();
                double p0 = a2 * alpha * alpha + (1 - a2) * beta * beta;
                double want_total = cfg.channel.is_perfect() ? 1.0
                                    : kind == CorrectorKind::Orthogonal ? 2 * alpha * alpha * beta * beta
                                                                        : 2 * beta * beta;
                ASSERT_NEAR(bp.total_success, want_total, 1e-12);
                ASSERT_NEAR(bp.branches[0].es_probability, p0, 1e-12);
                ASSERT_NEAR(bp.branches[0].es_probability + bp.branches[1].es_probability, 1, 1e-12);
                for (const auto &br : bp.branches) {
                    if (!br.reachable) {
                        continue;
                    }
                    ASSERT_NEAR(br.gate_fidelity, 1, 1e-12);
                    ASSERT_NEAR(br.control_ebit_fidelity, 1, 1e-12);
                    ASSERT_NEAR(br.joint_success, br.es_probability * br.conditional_success, 1e-12);
                }
            }
        }
    }
}
